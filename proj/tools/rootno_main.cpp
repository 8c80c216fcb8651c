// Command-line front end.  Every subcommand parses flags, calls one library
// operation, and prints either a plain line or a versioned JSON object on
// stdout.  Exit codes: 0 ok, 1 domain error, 2 unsupported case,
// 3 factorization incomplete, 4 parse error, 5 fixture failure.

#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "rootno/arith.hpp"
#include "rootno/artin.hpp"
#include "rootno/curve.hpp"
#include "rootno/errors.hpp"
#include "rootno/fixtures.hpp"
#include "rootno/globalroot.hpp"
#include "rootno/localroot.hpp"
#include "rootno/predict.hpp"

namespace {

using namespace rootno;

constexpr const char* kSchema = "rootno/1";

Integer to_integer(const std::string& text) {
    Integer out;
    if (text.empty() || mpz_set_str(out.get_mpz_t(), text.c_str(), 10) != 0)
        throw ParseError("bad integer \"" + text + "\"", 0);
    return out;
}

Sign to_sign(const std::string& text) {
    if (text == "+1" || text == "1") return Sign::plus();
    if (text == "-1") return Sign::minus();
    throw ParseError("bad sign \"" + text + "\" (use +1 or -1)", 0);
}

std::vector<Integer> to_hints(const std::vector<std::string>& texts) {
    std::vector<Integer> hints;
    for (const std::string& t : texts) hints.push_back(to_integer(t));
    return hints;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string jstr(const std::string& s) { return "\"" + json_escape(s) + "\""; }

// Fields arrive pre-rendered: numbers raw, strings through jstr().
void emit(bool json, const std::string& op,
          const std::vector<std::pair<std::string, std::string>>& fields,
          const std::string& plain) {
    if (!json) {
        std::cout << plain << "\n";
        return;
    }
    std::cout << "{\"schema\":\"" << kSchema << "\",\"op\":\"" << op << "\"";
    for (const auto& [k, v] : fields) std::cout << ",\"" << k << "\":" << v;
    std::cout << "}\n";
}

std::string sign_text(Sign w) { return w == Sign::plus() ? "+1" : "-1"; }
std::string sign_json(Sign w) { return w == Sign::plus() ? "1" : "-1"; }

const char* parity_token(Parity p) {
    switch (p) {
        case Parity::EVEN: return "EVEN";
        case Parity::ODD: return "ODD";
        case Parity::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

struct Options {
    std::string curve, prime, field, n, l, m, t, we, alpha, conductor;
    std::string name, group, radicand, fixtures, w, w_quad;
    std::vector<std::string> hints, w_rho;
    std::vector<long long> order2_dims;
    long long bound = 0, level = 1, dim = 1, order2_linear = 0, heegner = 0;
    bool json = false, not_self_dual = false, coprime = false;
    bool heegner_attested = false;
};

void run_bounds(const Options& o) {
    const int modes = (o.group.empty() ? 0 : 1) +
                      (o.order2_dims.empty() ? 0 : 1) + (o.heegner ? 1 : 0);
    if (modes > 1)
        throw ParseError("bounds takes one of --group, --order2-dims, --heegner",
                         0);
    if (!o.group.empty()) {
        const GroupId id = parse_group(o.group);
        if (id.family == GroupId::Family::SYM) {
            const Integer b = sn_rank_bound(id.n);
            emit(o.json, "bounds",
                 {{"group", jstr(o.group)}, {"bound", b.get_str()}},
                 b.get_str());
            return;
        }
        if (id.family == GroupId::Family::DIHEDRAL) {
            if (o.w.empty() || o.w_quad.empty() || o.w_rho.empty())
                throw ParseError(
                    "dihedral bounds need --w, --w-quad and --w-rho", 0);
            std::vector<Sign> rho;
            for (const std::string& s : o.w_rho) rho.push_back(to_sign(s));
            const DihedralParities dp = dihedral_parity_solver(
                Integer(static_cast<long>(id.n / 2)), to_sign(o.w),
                to_sign(o.w_quad), rho);
            std::ostringstream plain;
            plain << "bound " << dp.bound.get_str() << " (trivial "
                  << parity_token(dp.trivial) << ", sign "
                  << parity_token(dp.sign_rep) << ", two-dim "
                  << parity_token(dp.two_dim) << ")";
            emit(o.json, "bounds",
                 {{"group", jstr(o.group)},
                  {"trivial", jstr(parity_token(dp.trivial))},
                  {"sign", jstr(parity_token(dp.sign_rep))},
                  {"two_dim", jstr(parity_token(dp.two_dim))},
                  {"bound", dp.bound.get_str()},
                  {"witness",
                   "[" + std::to_string(dp.witness_trivial) + "," +
                       std::to_string(dp.witness_sign) + "," +
                       std::to_string(dp.witness_two_dim) + "]"}},
                 plain.str());
            return;
        }
        throw UnsupportedGroup("bounds: no bound operation for " + o.group);
    }
    if (!o.order2_dims.empty()) {
        const long long b = order2_bound(o.order2_dims, o.order2_linear);
        emit(o.json, "bounds",
             {{"linear", std::to_string(o.order2_linear)},
              {"bound", std::to_string(b)}},
             std::to_string(b));
        return;
    }
    if (o.heegner) {
        const long long b =
            heegner_bound(o.heegner, o.heegner_attested, o.coprime);
        emit(o.json, "bounds",
             {{"n", std::to_string(o.heegner)}, {"bound", std::to_string(b)}},
             std::to_string(b));
        return;
    }
    throw ParseError("bounds needs --group, --order2-dims or --heegner", 0);
}

void run_verify(const Options& o) {
    const FixtureReport report = run_fixtures(o.fixtures);
    if (o.json) {
        std::cout << "{\"schema\":\"" << kSchema
                  << "\",\"op\":\"verify\",\"passed\":" << report.passed
                  << ",\"failed\":" << report.failed << ",\"results\":[";
        for (std::size_t i = 0; i < report.results.size(); ++i) {
            const AssertionResult& r = report.results[i];
            if (i) std::cout << ",";
            std::cout << "{\"label\":" << jstr(r.label)
                      << ",\"key\":" << jstr(r.key)
                      << ",\"expected\":" << jstr(r.expected)
                      << ",\"got\":" << jstr(r.got)
                      << ",\"passed\":" << (r.passed ? "true" : "false")
                      << ",\"provenance\":" << jstr(r.provenance) << "}";
        }
        std::cout << "]}\n";
    } else {
        for (const AssertionResult& r : report.results) {
            if (r.passed)
                std::cout << "PASS  " << r.label << " " << r.key << " = "
                          << r.got << "   [" << r.provenance << "]\n";
            else
                std::cout << "FAIL  " << r.label << " " << r.key
                          << ": expected " << r.expected << ", got " << r.got
                          << "   [" << r.provenance << "]\n";
        }
        std::cout << report.passed << " passed, " << report.failed
                  << " failed\n";
    }
    if (!report.ok())
        throw FixtureFailure(std::to_string(report.failed) +
                             " fixture assertions failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Root numbers of elliptic curves and parity predictions"};
    app.require_subcommand(1);
    Options o;

    const auto add_curve = [&](CLI::App* cmd, bool with_hints = true) {
        cmd->add_option("--curve", o.curve, "model [a1,a2,a3,a4,a6]")
            ->required();
        if (with_hints)
            cmd->add_option("--hint-factor", o.hints,
                            "known prime factor of the discriminant");
    };
    const auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", o.json, "JSON output");
    };

    CLI::App* local = app.add_subcommand("local", "w(E/Q_p) at one prime");
    add_curve(local, false);
    local->add_option("--prime", o.prime)->required();
    add_json(local);
    local->callback([&] {
        const WeierstrassModel m = parse_curve(o.curve);
        const Integer p = to_integer(o.prime);
        const Sign w = local_root_number(m, p);
        emit(o.json, "local",
             {{"curve", jstr(curve_text(m))},
              {"p", p.get_str()},
              {"root_number", sign_json(w)}},
             sign_text(w));
    });

    CLI::App* global = app.add_subcommand("global", "w(E/Q)");
    add_curve(global);
    add_json(global);
    global->callback([&] {
        const WeierstrassModel m = parse_curve(o.curve);
        const Sign w = global_root_number(m, to_hints(o.hints));
        emit(o.json, "global",
             {{"curve", jstr(curve_text(m))}, {"root_number", sign_json(w)}},
             sign_text(w));
    });

    CLI::App* basechange =
        app.add_subcommand("basechange", "w(E/K) over a supported field");
    add_curve(basechange);
    basechange
        ->add_option("--field", o.field,
                     "quad:-2 | biquad:-3,13 | zeta8 | radical:m=5,p=3,n=2")
        ->required();
    add_json(basechange);
    basechange->callback([&] {
        const WeierstrassModel m = parse_curve(o.curve);
        const Sign w = base_change_root_number(m, parse_field_text(o.field),
                                               to_hints(o.hints));
        emit(o.json, "basechange",
             {{"curve", jstr(curve_text(m))},
              {"field", jstr(o.field)},
              {"root_number", sign_json(w)}},
             sign_text(w));
    });

    CLI::App* scan =
        app.add_subcommand("twist-scan", "root numbers of all twists |d| <= bound");
    add_curve(scan);
    scan->add_option("--bound", o.bound)->required();
    add_json(scan);
    scan->callback([&] {
        const WeierstrassModel m = parse_curve(o.curve);
        const TwistScanReport rep =
            twist_scan(m, o.bound, to_hints(o.hints));
        if (o.json) {
            std::cout << "{\"schema\":\"" << kSchema
                      << "\",\"op\":\"twist-scan\",\"curve\":"
                      << jstr(curve_text(m)) << ",\"bound\":" << o.bound
                      << ",\"report\":" << rep.json() << "}\n";
        } else {
            std::cout << "period " << rep.period.get_str() << "\n"
                      << "d>0: " << rep.pos_plus << " plus, " << rep.pos_minus
                      << " minus\n"
                      << "d<0: " << rep.neg_plus << " plus, " << rep.neg_minus
                      << " minus\n"
                      << "violations " << rep.violations.size() << "\n";
        }
    });

    CLI::App* tower =
        app.add_subcommand("tower", "w(E/Q(radicand^(1/p^n)))");
    add_curve(tower);
    tower->add_option("--prime", o.prime)->required();
    tower->add_option("--level", o.level, "tower level n")->required();
    tower->add_option("--radicand", o.radicand)->required();
    add_json(tower);
    tower->callback([&] {
        const WeierstrassModel m = parse_curve(o.curve);
        const Integer p = to_integer(o.prime);
        const Integer radicand = to_integer(o.radicand);
        const Sign w =
            tower_root_number(m, p, o.level, radicand, to_hints(o.hints));
        emit(o.json, "tower",
             {{"curve", jstr(curve_text(m))},
              {"p", p.get_str()},
              {"level", std::to_string(o.level)},
              {"radicand", radicand.get_str()},
              {"root_number", sign_json(w)}},
             sign_text(w));
    });

    CLI::App* artin =
        app.add_subcommand("artin", "w(E, rho) for a self-dual twist");
    artin->add_option("--we", o.we, "w(E/Q), +1 or -1")->required();
    artin->add_option("--dim", o.dim)->required();
    artin->add_option("--alpha", o.alpha, "squarefree determinant radicand")
        ->required();
    artin->add_option("--conductor", o.conductor)->required();
    artin->add_flag("--not-self-dual", o.not_self_dual,
                    "drop the self-duality hypothesis (rejected)");
    artin->add_flag("--coprime-attested", o.coprime,
                    "attest gcd(alpha, N_E) = 1 checks were done");
    add_json(artin);
    artin->callback([&] {
        const RepDescriptor rep{o.dim, !o.not_self_dual, to_integer(o.alpha),
                                o.coprime};
        const Integer ne = to_integer(o.conductor);
        const Sign w = artin_twist_root(to_sign(o.we), rep, ne);
        const std::string rep_json =
            "{\"dim\":" + std::to_string(rep.dim) +
            ",\"self_dual\":" + (rep.self_dual ? "true" : "false") +
            ",\"alpha\":" + rep.alpha.get_str() +
            ",\"coprime_attested\":" + (rep.coprime_attested ? "true" : "false") +
            "}";
        emit(o.json, "artin",
             {{"rep", rep_json},
              {"conductor", ne.get_str()},
              {"w_e", sign_json(to_sign(o.we))},
              {"root_number", sign_json(w)}},
             sign_text(w));
    });

    CLI::App* bounds =
        app.add_subcommand("bounds", "rank lower bounds from parity");
    bounds->add_option("--group", o.group, "D10, S14, ...");
    bounds->add_option("--w", o.w, "w(E/Q) for dihedral bounds");
    bounds->add_option("--w-quad", o.w_quad, "w(E, eps)");
    bounds->add_option("--w-rho", o.w_rho, "w(E, rho_i), repeatable");
    bounds->add_option("--order2-dims", o.order2_dims,
                       "odd self-dual dimensions");
    bounds->add_option("--order2-linear", o.order2_linear,
                       "order <= 2 linear character count");
    bounds->add_option("--heegner", o.heegner, "cyclic degree n");
    bounds->add_flag("--heegner-attested", o.heegner_attested);
    bounds->add_flag("--coprime-attested", o.coprime);
    add_json(bounds);
    bounds->callback([&] { run_bounds(o); });

    CLI::App* congruent =
        app.add_subcommand("congruent", "congruent number prediction");
    congruent->add_option("--n", o.n)->required();
    congruent->add_option("--hint-factor", o.hints);
    add_json(congruent);
    congruent->callback([&] {
        const CongruentVerdict v =
            predicted_congruent(to_integer(o.n), to_hints(o.hints));
        if (o.json) {
            std::cout << "{\"schema\":\"" << kSchema
                      << "\",\"op\":\"congruent\",\"verdict\":" << v.json()
                      << "}\n";
        } else if (v.predicted_congruent) {
            std::cout << v.n.get_str()
                      << " is predicted congruent (root number -1, "
                         "conditional on the parity conjecture)\n";
        } else {
            std::cout << v.n.get_str() << " has root number +1; " << v.caveat
                      << "\n";
        }
    });

    CLI::App* family =
        app.add_subcommand("family", "fibre root numbers of named families");
    family->add_option("--name", o.name, "cassels | washington")->required();
    family->add_option("--l", o.l);
    family->add_option("--m", o.m);
    family->add_option("--t", o.t);
    family->add_option("--hint-factor", o.hints);
    add_json(family);
    family->callback([&] {
        std::vector<std::pair<std::string, std::string>> fields{
            {"name", jstr(o.name)}};
        Sign w = Sign::plus();
        if (o.name == "cassels") {
            if (o.l.empty() || o.m.empty())
                throw ParseError("cassels needs --l and --m", 0);
            const Integer l = to_integer(o.l), m2 = to_integer(o.m);
            w = cassels_fiber_root(l, m2, to_hints(o.hints));
            fields.push_back({"l", l.get_str()});
            fields.push_back({"m", m2.get_str()});
        } else if (o.name == "washington") {
            if (o.t.empty()) throw ParseError("washington needs --t", 0);
            const Integer t = to_integer(o.t);
            w = washington_fiber_root(t, to_hints(o.hints));
            fields.push_back({"t", t.get_str()});
        } else {
            throw ParseError("unknown family \"" + o.name + "\"", 0);
        }
        fields.push_back({"root_number", sign_json(w)});
        fields.push_back({"conditional", "true"});
        emit(o.json, "family", fields, sign_text(w));
    });

    CLI::App* predict =
        app.add_subcommand("predict", "minimalist Galois-module prediction");
    predict->add_option("--group", o.group, "A5, S6, ... or D10")->required();
    predict->add_option("--w", o.w, "w(E/Q), +1 or -1")->required();
    predict->add_option("--conductor", o.conductor,
                        "N_E for the dihedral D10 field");
    add_json(predict);
    predict->callback([&] {
        MinimalistPrediction pred;
        if (!o.conductor.empty()) {
            if (o.group != "D10")
                throw ParseError("--conductor only applies to D10", 0);
            pred = minimalist_D10(to_integer(o.conductor), to_sign(o.w));
        } else {
            pred = minimalist_WG(group_table(parse_group(o.group)),
                                 to_sign(o.w));
        }
        if (o.json) {
            std::cout << "{\"schema\":\"" << kSchema
                      << "\",\"op\":\"predict\",\"group\":" << jstr(o.group)
                      << ",\"w\":" << sign_json(to_sign(o.w))
                      << ",\"prediction\":" << pred.json() << "}\n";
        } else {
            std::cout << "rank >= " << pred.rank
                      << " (conditional on the parity conjecture)";
            if (!pred.irreps.empty()) {
                std::cout << " from";
                for (const std::string& name : pred.irreps)
                    std::cout << " " << name;
            }
            std::cout << "\n";
        }
    });

    CLI::App* verify =
        app.add_subcommand("verify", "replay the fixture corpus");
    verify->add_option("--fixtures", o.fixtures, "line-delimited JSON file")
        ->required();
    add_json(verify);
    verify->callback([&] { run_verify(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 4;
    } catch (const UnsupportedLocalCase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedSplitting& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedGroup& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TableMiss& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ModelSearchExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FactorizationIncomplete& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const FixtureFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
