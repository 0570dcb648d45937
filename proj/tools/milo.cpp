// milo: exact computations with monomial ideals from the command line.
//
//   milo reg --ideal "x1x2, x1x3, x2^2"
//   milo scan --ideal ideal.txt --jobs 4 --out report.json
//   milo examples run all
//   milo fuzz --samples 200 --nvars 4 --seed 7
//
// Exit codes: 0 success, 1 failed assertion/violation, 2 usage or domain
// error, 3 resource cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "milo/milo.hpp"

namespace {

using namespace milo;
using nlohmann::json;

struct Common {
    std::string ideal_arg;
    std::size_t nvars = 0;            // 0: infer from the generators
    std::string format = "text";      // text | structured
    std::uint32_t chr = 32003;
    unsigned jobs = 1;
    std::size_t cap_gens = 22;        // linear-quotients search cap
    std::string out_path;
};

void add_common(CLI::App* sub, Common& c, bool needs_ideal = true) {
    auto* opt = sub->add_option("--ideal", c.ideal_arg,
                                "generator list (text or structured), inline or a file path");
    if (needs_ideal) opt->required();
    sub->add_option("--nvars", c.nvars, "ambient variable count override");
    sub->add_option("--format", c.format, "text|structured input/stdout format")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--char", c.chr, "field characteristic (prime)");
    sub->add_option("--jobs", c.jobs, "worker threads for scans");
    sub->add_option("--cap-gens", c.cap_gens, "generator cap for the linear-quotients search");
    sub->add_option("--out", c.out_path, "write the structured report to this file");
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool is_file(const std::string& arg) {
    std::ifstream f(arg);
    return f.good();
}

MonomialIdeal load_ideal(const Common& c, const std::string& arg) {
    std::string text = is_file(arg) ? slurp(arg) : arg;
    if (c.format == "structured") {
        json doc = json::parse(text, nullptr, true, true);
        return ideal_from_json(doc);
    }
    if (c.nvars > 0) return parse_ideal(text, c.nvars);
    return parse_ideal(text);
}

// Emit the human rendering or, under --format structured, the document
// itself; --out always receives the document.
void emit(const Common& c, const json& doc, const std::string& human) {
    if (c.format == "structured")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << human;
    if (!c.out_path.empty()) {
        std::ofstream f(c.out_path);
        if (!f) throw parse_error("cannot write " + c.out_path);
        f << doc.dump(2) << "\n";
    }
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w;
    for (const auto& row : rows) {
        if (w.size() < row.size()) w.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << row[i];
            if (i + 1 < row.size())
                out << std::string(w[i] - row[i].size() + 2, ' ');
        }
        out << "\n";
    }
    return out.str();
}

std::string degree_cell(const std::optional<std::uint64_t>& d) {
    return d ? std::to_string(*d) : std::string("mixed");
}

std::string exps_cell(const std::vector<Exponent>& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

std::string yn(bool b) { return b ? "yes" : "no"; }

// ---- subcommand bodies ------------------------------------------------

int cmd_reg(const Common& c) {
    MonomialIdeal I = load_ideal(c, c.ideal_arg);
    std::uint64_t r = regularity(I, c.chr);
    json doc = {{"command", "reg"}, {"char", c.chr}, {"ideal", to_json(I)}, {"regularity", r}};
    emit(c, doc, "reg = " + std::to_string(r) + "\n");
    return 0;
}

int cmd_betti(const Common& c) {
    MonomialIdeal I = load_ideal(c, c.ideal_arg);
    BettiTable B = betti(I, c.chr);
    json doc = {{"command", "betti"}, {"table", to_json(B)}};
    std::vector<std::vector<std::string>> rows = {{"i", "multidegree", "|a|", "rank"}};
    for (const auto& [key, rank] : B.entries) {
        std::uint64_t total = 0;
        for (Exponent e : key.second) total += e;
        rows.push_back({std::to_string(key.first), exps_cell(key.second),
                        std::to_string(total), std::to_string(rank)});
    }
    std::string human = render_table(rows) + "regularity = " +
                        std::to_string(B.regularity()) + "  (char " +
                        std::to_string(c.chr) + ")\n";
    emit(c, doc, human);
    return 0;
}

int cmd_linres(const Common& c) {
    MonomialIdeal I = load_ideal(c, c.ideal_arg);
    bool lin = has_linear_resolution(I, c.chr);
    Descriptors d = descriptors(I);
    json doc = {{"command", "linres"},
                {"linear_resolution", lin},
                {"regularity", regularity(I, c.chr)}};
    if (d.equigenerated) doc["degree"] = *d.equigenerated;
    std::ostringstream human;
    human << "linear resolution: " << yn(lin) << "\n";
    if (d.equigenerated)
        human << "generated in degree " << *d.equigenerated << ", reg = "
              << doc["regularity"].get<std::uint64_t>() << "\n";
    else
        human << "generators have mixed degrees\n";
    if (I.is_proper() && !I.is_zero() && d.equigenerated) {
        QuotientOrderResult q = linear_quotients(I, c.cap_gens);
        const char* s = q.status == QuotientStatus::Found      ? "found"
                        : q.status == QuotientStatus::NotFound ? "none"
                                                               : "unknown (cap)";
        doc["linear_quotients"] = s;
        human << "linear quotients order: " << s << "\n";
        if (q.status == QuotientStatus::Found) {
            json order = json::array();
            std::string line;
            for (const Monomial& g : q.order) {
                order.push_back(to_string(g));
                if (!line.empty()) line += ", ";
                line += to_string(g);
            }
            doc["order"] = std::move(order);
            human << "order: " << line << "\n";
        }
    }
    emit(c, doc, human.str());
    return 0;
}

int cmd_polymatroidal(const Common& c) {
    MonomialIdeal I = load_ideal(c, c.ideal_arg);
    ExchangeResult r = is_polymatroidal(I);
    json doc = {{"command", "polymatroidal"}, {"polymatroidal", r.polymatroidal}};
    std::ostringstream human;
    human << "polymatroidal: " << yn(r.polymatroidal) << "\n";
    if (r.witness) {
        doc["witness"] = {{"u", to_string(r.witness->u)},
                          {"v", to_string(r.witness->v)},
                          {"var", r.witness->var + 1}};
        human << "exchange fails for u = " << to_string(r.witness->u) << ", v = "
              << to_string(r.witness->v) << " at x" << r.witness->var + 1 << "\n";
    } else {
        doc["witness"] = nullptr;
    }
    emit(c, doc, human.str());
    return 0;
}

int cmd_matroidal(const Common& c) {
    MonomialIdeal I = load_ideal(c, c.ideal_arg);
    bool m = is_matroidal(I);
    json doc = {{"command", "matroidal"}, {"matroidal", m}};
    emit(c, doc, "matroidal: " + yn(m) + "\n");
    return 0;
}

int cmd_localize(const Common& c, const std::string& prime_arg) {
    MonomialIdeal I = load_ideal(c, c.ideal_arg);
    MonomialPrime p = parse_prime(prime_arg, I.nvars());
    MonomialIdeal L = localize(I, p);
    json doc = {{"command", "localize"},
                {"prime", to_json(p)},
                {"ideal", to_json(L)},
                {"pretty", to_string(L)}};
    emit(c, doc, to_string(L) + "\n");
    return 0;
}

int cmd_saturate(const Common& c, std::size_t var, bool graded) {
    MonomialIdeal I = load_ideal(c, c.ideal_arg);
    MonomialIdeal S(I.nvars());
    json doc = {{"command", "saturate"}};
    if (var > 0) {
        if (graded) throw parse_error("--var and --graded are mutually exclusive");
        if (var > I.nvars()) throw dimension_error("variable index out of range");
        S = saturate_var(I, var - 1);
        doc["var"] = var;
    } else {
        S = saturate_graded(I);
        doc["graded"] = true;
    }
    doc["ideal"] = to_json(S);
    doc["pretty"] = to_string(S);
    emit(c, doc, to_string(S) + "\n");
    return 0;
}

int cmd_decompose(const Common& c) {
    MonomialIdeal I = load_ideal(c, c.ideal_arg);
    std::vector<IrreducibleComponent> comps = irreducible_decomposition(I);
    json doc = {{"command", "decompose"}, {"components", json::array()}};
    std::vector<std::vector<std::string>> rows = {{"#", "component", "radical"}};
    for (std::size_t k = 0; k < comps.size(); ++k) {
        MonomialIdeal Q = comps[k].ideal();
        doc["components"].push_back(
            {{"ideal", to_json(Q)}, {"pretty", to_string(Q)}, {"radical", to_json(comps[k].radical())}});
        rows.push_back({std::to_string(k + 1), to_string(Q), to_string(comps[k].radical())});
    }
    emit(c, doc, render_table(rows));
    return 0;
}

int cmd_ass(const Common& c) {
    MonomialIdeal I = load_ideal(c, c.ideal_arg);
    std::vector<MonomialPrime> ass = ass_primes(I);
    std::vector<MonomialPrime> mins = min_primes(I);
    json doc = {{"command", "ass"},
                {"ass", json::array()},
                {"min", json::array()},
                {"has_embedded", ass.size() > mins.size()}};
    std::vector<std::vector<std::string>> rows = {{"prime", "kind"}};
    for (const MonomialPrime& p : ass) {
        bool minimal = std::find(mins.begin(), mins.end(), p) != mins.end();
        doc["ass"].push_back(to_json(p));
        rows.push_back({to_string(p), minimal ? "minimal" : "embedded"});
    }
    for (const MonomialPrime& p : mins) doc["min"].push_back(to_json(p));
    emit(c, doc, render_table(rows));
    return 0;
}

int cmd_height(const Common& c) {
    MonomialIdeal I = load_ideal(c, c.ideal_arg);
    std::size_t h = height(I);
    bool unmixed = is_unmixed(I);
    json doc = {{"command", "height"}, {"height", h}, {"unmixed", unmixed}};
    emit(c, doc,
         "height = " + std::to_string(h) + "\nunmixed: " + yn(unmixed) + "\n");
    return 0;
}

int cmd_scan(const Common& c) {
    MonomialIdeal I = load_ideal(c, c.ideal_arg);
    LocalizationScanReport rep = scan_localizations(I, c.chr, c.jobs);
    json doc = to_json(rep);
    doc["command"] = "scan";
    std::vector<std::vector<std::string>> rows = {{"prime", "localization", "degree", "reg", "linear"}};
    for (const LocalizationRow& row : rep.rows)
        rows.push_back({to_string(row.prime), to_string(row.localized),
                        degree_cell(row.equi_degree), std::to_string(row.reg),
                        yn(row.linear)});
    std::ostringstream human;
    human << render_table(rows) << "all localizations linear: " << yn(rep.all_linear)
          << "\npolymatroidal: " << yn(rep.polymatroidal)
          << "\nconsistent: " << yn(rep.consistent) << "\n";
    emit(c, doc, human.str());
    return 0;
}

int cmd_powers(const Common& c, std::uint64_t kmax) {
    MonomialIdeal I = load_ideal(c, c.ideal_arg);
    std::vector<PowerRow> rows = powers_linearity_profile(I, kmax, c.chr);
    json doc = {{"command", "powers"}, {"rows", json::array()}};
    std::vector<std::vector<std::string>> tab = {{"k", "degree", "reg", "linear"}};
    for (const PowerRow& row : rows) {
        doc["rows"].push_back(to_json(row));
        tab.push_back({std::to_string(row.k), degree_cell(row.equi_degree),
                       std::to_string(row.reg), yn(row.linear)});
    }
    emit(c, doc, render_table(tab));
    return 0;
}

int cmd_product_check(const Common& c, const std::string& other_arg) {
    MonomialIdeal I = load_ideal(c, c.ideal_arg);
    MonomialIdeal J = load_ideal(c, other_arg);
    ProductCheck pc = product_polymatroidality(I, J);
    json doc = {{"command", "product-check"},
                {"product_polymatroidal", pc.product_polymatroidal},
                {"left_polymatroidal", pc.left_polymatroidal},
                {"right_polymatroidal", pc.right_polymatroidal}};
    std::ostringstream human;
    human << "I*J polymatroidal: " << yn(pc.product_polymatroidal) << "\n"
          << "I   polymatroidal: " << yn(pc.left_polymatroidal) << "\n"
          << "J   polymatroidal: " << yn(pc.right_polymatroidal) << "\n";
    emit(c, doc, human.str());
    return 0;
}

int cmd_veronese(const Common& c, std::uint64_t degree, const std::string& bounds_arg) {
    json doc = {{"command", "veronese"}};
    std::ostringstream human;
    if (!c.ideal_arg.empty()) {
        // recognition mode
        MonomialIdeal I = load_ideal(c, c.ideal_arg);
        auto r = is_veronese_type(I);
        if (r) {
            doc["veronese"] = true;
            doc["degree"] = r->first;
            doc["bounds"] = r->second;
            human << "Veronese type: degree " << r->first << ", bounds "
                  << exps_cell(r->second) << "\n";
        } else {
            doc["veronese"] = false;
            human << "not of Veronese type\n";
        }
    } else {
        // construction mode
        if (degree == 0 || bounds_arg.empty())
            throw parse_error("construction needs --degree and --bounds (or pass --ideal)");
        std::vector<Exponent> bounds;
        std::size_t pos = 0;
        while (pos < bounds_arg.size()) {
            while (pos < bounds_arg.size() && (bounds_arg[pos] == ',' || bounds_arg[pos] == ' '))
                ++pos;
            if (pos >= bounds_arg.size()) break;
            std::size_t used = 0;
            unsigned long v = std::stoul(bounds_arg.substr(pos), &used);
            bounds.push_back(static_cast<Exponent>(v));
            pos += used;
        }
        std::size_t n = c.nvars > 0 ? c.nvars : bounds.size();
        MonomialIdeal V = veronese_type(n, degree, bounds);
        doc["ideal"] = to_json(V);
        doc["pretty"] = to_string(V);
        human << to_string(V) << "\n";
    }
    emit(c, doc, human.str());
    return 0;
}

int report_examples(const Common& c, const std::vector<std::string>& names) {
    json doc = {{"command", "examples"}, {"reports", json::array()}};
    std::ostringstream human;
    std::size_t passed = 0;
    for (const std::string& name : names) {
        ExampleReport r = run_example(name, c.chr, c.jobs);
        json jr = {{"name", r.name}, {"passed", r.passed()}, {"checks", json::array()}};
        human << "== " << r.name << " ==\n";
        for (const ExampleCheck& chk : r.checks) {
            jr["checks"].push_back({{"what", chk.what}, {"pass", chk.pass}, {"detail", chk.detail}});
            human << "  [" << (chk.pass ? "PASS" : "FAIL") << "] " << chk.what;
            if (!chk.detail.empty()) human << "  (" << chk.detail << ")";
            human << "\n";
        }
        if (r.passed()) ++passed;
    }
    human << passed << "/" << names.size() << " examples passed\n";
    doc["passed"] = passed;
    doc["total"] = names.size();
    emit(c, doc, human.str());
    return passed == names.size() ? 0 : 1;
}

struct FuzzParams {
    std::uint64_t samples = 100;
    std::uint64_t seed = 1;
    std::size_t nvars = 4;
    std::uint64_t degree = 3;
    std::size_t gens = 6;
    bool squarefree = false;
};

int cmd_fuzz(const Common& c, const FuzzParams& fp) {
    json doc = {{"command", "fuzz"},
                {"seed", fp.seed},
                {"samples", fp.samples},
                {"nvars", fp.nvars},
                {"degree", fp.degree},
                {"gens", fp.gens},
                {"squarefree", fp.squarefree},
                {"char", c.chr},
                {"findings", json::array()},
                {"violations", json::array()}};
    std::ostringstream human;
    std::size_t findings = 0, violations = 0;
    for (std::uint64_t k = 0; k < fp.samples; ++k) {
        std::uint64_t s = mix_seed(fp.seed, k);
        MonomialIdeal I = random_ideal(s, fp.nvars, fp.degree, fp.gens, fp.squarefree);
        if (I.is_zero() || I.is_unit()) continue;
        TheoremVerdict v = verify_theorem_biconditionals(I, c.chr, c.jobs);
        bool consistent = (v.all_linear == v.exchange);
        if (consistent && v.violated.empty()) continue;
        json record = {{"sample", k},
                       {"stream_seed", s},
                       {"ideal", to_json(I)},
                       {"pretty", to_string(I)},
                       {"all_linear", v.all_linear},
                       {"polymatroidal", v.exchange},
                       {"flags", to_json(v.flags)}};
        if (!v.violated.empty()) {
            record["violated"] = v.violated;
            doc["violations"].push_back(record);
            ++violations;
            human << "VIOLATION sample " << k << ": " << to_string(I) << "\n";
        } else {
            doc["findings"].push_back(record);
            ++findings;
            human << "finding sample " << k << ": " << to_string(I)
                  << "  (all_linear = " << yn(v.all_linear) << ", polymatroidal = "
                  << yn(v.exchange) << ")\n";
        }
    }
    human << fp.samples << " samples, " << findings << " open findings, "
          << violations << " proven-case violations\n";
    doc["finding_count"] = findings;
    doc["violation_count"] = violations;
    emit(c, doc, human.str());
    return violations == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact monomial-ideal calculator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "milo 1.0.0");

    Common c;
    int rc = 0;

    auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
    add_common(reg, c);
    reg->callback([&] { rc = cmd_reg(c); });

    auto* bet = app.add_subcommand("betti", "multigraded Betti table");
    add_common(bet, c);
    bet->callback([&] { rc = cmd_betti(c); });

    auto* lin = app.add_subcommand("linres", "linear resolution and quotients check");
    add_common(lin, c);
    lin->callback([&] { rc = cmd_linres(c); });

    auto* pol = app.add_subcommand("polymatroidal", "exchange-property check");
    add_common(pol, c);
    pol->callback([&] { rc = cmd_polymatroidal(c); });

    auto* mat = app.add_subcommand("matroidal", "squarefree exchange-property check");
    add_common(mat, c);
    mat->callback([&] { rc = cmd_matroidal(c); });

    std::string prime_arg;
    auto* loc = app.add_subcommand("localize", "monomial localization at a prime");
    add_common(loc, c);
    loc->add_option("--prime", prime_arg, "monomial prime, e.g. \"x1,x3\" or \"1,3\"")->required();
    loc->callback([&] { rc = cmd_localize(c, prime_arg); });

    std::size_t sat_var = 0;
    bool sat_graded = false;
    auto* sat = app.add_subcommand("saturate", "saturation (graded, or by one variable)");
    add_common(sat, c);
    sat->add_option("--var", sat_var, "saturate with respect to x<i> (1-based)");
    sat->add_flag("--graded", sat_graded, "saturate with respect to the maximal ideal (default)");
    sat->callback([&] { rc = cmd_saturate(c, sat_var, sat_graded); });

    auto* dec = app.add_subcommand("decompose", "irredundant irreducible decomposition");
    add_common(dec, c);
    dec->callback([&] { rc = cmd_decompose(c); });

    auto* ass = app.add_subcommand("ass", "associated primes");
    add_common(ass, c);
    ass->callback([&] { rc = cmd_ass(c); });

    auto* hgt = app.add_subcommand("height", "height and unmixedness");
    add_common(hgt, c);
    hgt->callback([&] { rc = cmd_height(c); });

    auto* scn = app.add_subcommand("scan", "linearity scan over all monomial localizations");
    add_common(scn, c);
    scn->callback([&] { rc = cmd_scan(c); });

    std::uint64_t kmax = 3;
    auto* pow = app.add_subcommand("powers", "linearity profile of I, I^2, ..., I^kmax");
    add_common(pow, c);
    pow->add_option("--kmax", kmax, "largest power to inspect");
    pow->callback([&] { rc = cmd_powers(c, kmax); });

    std::string other_arg;
    auto* prd = app.add_subcommand("product-check", "exchange checks for I, J and I*J");
    add_common(prd, c);
    prd->add_option("--other", other_arg, "second ideal J (text or file)")->required();
    prd->callback([&] { rc = cmd_product_check(c, other_arg); });

    std::uint64_t ver_degree = 0;
    std::string bounds_arg;
    auto* ver = app.add_subcommand("veronese", "Veronese-type construction or recognition");
    add_common(ver, c, /*needs_ideal=*/false);
    ver->add_option("--degree", ver_degree, "construction: generator degree");
    ver->add_option("--bounds", bounds_arg, "construction: exponent bounds, e.g. \"2,1,1\"");
    ver->callback([&] { rc = cmd_veronese(c, ver_degree, bounds_arg); });

    auto* exa = app.add_subcommand("examples", "worked-example registry");
    exa->require_subcommand(1);
    auto* lst = exa->add_subcommand("list", "list registry entries");
    lst->callback([&] {
        for (const std::string& n : example_names()) std::cout << n << "\n";
    });
    std::string example_name;
    auto* run = exa->add_subcommand("run", "re-derive an entry (or \"all\") and check its claims");
    add_common(run, c, /*needs_ideal=*/false);
    run->add_option("name", example_name, "registry entry or \"all\"")->required();
    run->callback([&] {
        std::vector<std::string> names;
        if (example_name == "all")
            names = example_names();
        else
            names.push_back(example_name);
        rc = report_examples(c, names);
    });

    FuzzParams fp;
    auto* fuz = app.add_subcommand("fuzz", "seeded random search for conjecture findings");
    add_common(fuz, c, /*needs_ideal=*/false);
    fuz->add_option("--samples", fp.samples, "number of random ideals");
    fuz->add_option("--seed", fp.seed, "base seed");
    fuz->add_option("--degree", fp.degree, "generator degree");
    fuz->add_option("--gens", fp.gens, "requested generator count");
    fuz->add_flag("--squarefree", fp.squarefree, "sample squarefree ideals");
    fuz->callback([&] {
        if (c.nvars > 0) fp.nvars = c.nvars;   // --nvars from the shared set
        rc = cmd_fuzz(c, fp);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dimension_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
