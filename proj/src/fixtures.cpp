// Corpus records are one JSON object per line so that diffs stay readable
// and a broken line can be reported by number.  The runner never throws on
// a value mismatch or an evaluating throw; both become failed results, and
// the caller decides what a failure is worth.

#include "rootno/fixtures.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rootno/artin.hpp"
#include "rootno/errors.hpp"
#include "rootno/localroot.hpp"

namespace rootno {

namespace {

using nlohmann::json;

Integer parse_integer(const std::string& text, std::size_t line) {
    Integer out;
    if (text.empty() || mpz_set_str(out.get_mpz_t(), text.c_str(), 10) != 0)
        throw ParseError("fixtures line " + std::to_string(line) +
                             ": bad integer \"" + text + "\"",
                         line);
    return out;
}

std::string sign_text(Sign s) { return s == Sign::plus() ? "+1" : "-1"; }

const char* class_token(ReductionClass c) {
    switch (c) {
        case ReductionClass::GOOD: return "GOOD";
        case ReductionClass::SPLIT_MULT: return "SPLIT_MULT";
        case ReductionClass::NONSPLIT_MULT: return "NONSPLIT_MULT";
        case ReductionClass::ADDITIVE_POT_GOOD: return "ADDITIVE_POT_GOOD";
        case ReductionClass::ADDITIVE_POT_MULT: return "ADDITIVE_POT_MULT";
    }
    return "?";
}

// Key grammar: either a bare word or word@argument.
std::pair<std::string, std::string> split_key(const std::string& key) {
    const std::size_t at = key.find('@');
    if (at == std::string::npos) return {key, ""};
    return {key.substr(0, at), key.substr(at + 1)};
}

bool known_key(const std::string& key) {
    const auto [op, arg] = split_key(key);
    if (op == "global") return arg.empty();
    if (op == "local" || op == "class" || op == "kodaira" ||
        op == "basechange" || op == "twist" || op == "artin")
        return !arg.empty();
    return false;
}

std::string evaluate(const FixtureRecord& rec, const std::string& key) {
    const auto [op, arg] = split_key(key);
    if (op == "global") return sign_text(global_root_number(rec.model, rec.hints));
    if (op == "local") return sign_text(local_root_number(rec.model, Integer(arg)));
    if (op == "class")
        return class_token(reduction_class(rec.model, Integer(arg)));
    if (op == "kodaira") return kodaira_type(rec.model, Integer(arg)).str();
    if (op == "basechange")
        return sign_text(
            base_change_root_number(rec.model, parse_field_text(arg), rec.hints));
    if (op == "twist")
        return sign_text(quadratic_twist_root(rec.model, Integer(arg), rec.hints));
    if (op == "artin") {
        // DIM:ALPHA:NE
        const std::size_t c1 = arg.find(':');
        const std::size_t c2 = arg.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ParseError("artin assertion needs DIM:ALPHA:NE", 0);
        const RepDescriptor rep{std::stoll(arg.substr(0, c1)), true,
                                Integer(arg.substr(c1 + 1, c2 - c1 - 1)), true};
        const Integer ne(arg.substr(c2 + 1));
        return sign_text(
            artin_twist_root(global_root_number(rec.model, rec.hints), rep, ne));
    }
    throw ParseError("unknown assertion key " + key, 0);
}

}  // namespace

FieldDescriptor parse_field_text(const std::string& text) {
    const auto bad = [&](const std::string& why) {
        return ParseError("field descriptor \"" + text + "\": " + why, 0);
    };
    const auto num = [&](const std::string& part) {
        Integer out;
        if (part.empty() ||
            mpz_set_str(out.get_mpz_t(), part.c_str(), 10) != 0)
            throw bad("bad integer \"" + part + "\"");
        return out;
    };
    if (text == "zeta8") return FieldDescriptor{Zeta8{}};
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) throw bad("expected kind:arguments");
    const std::string kind = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (kind == "quad") return FieldDescriptor{Quadratic{num(rest)}};
    if (kind == "biquad") {
        const std::size_t comma = rest.find(',');
        if (comma == std::string::npos) throw bad("biquad needs d1,d2");
        return FieldDescriptor{Biquadratic{num(rest.substr(0, comma)),
                                           num(rest.substr(comma + 1))}};
    }
    if (kind == "radical") {
        // m=5,p=3,n=2 in any order, all three required.
        Integer m = 0, p = 0;
        long long n = -1;
        std::stringstream ss(rest);
        std::string part;
        while (std::getline(ss, part, ',')) {
            const std::size_t eq = part.find('=');
            if (eq != 1 || part.empty()) throw bad("expected k=v entries");
            const std::string value = part.substr(2);
            switch (part[0]) {
                case 'm': m = num(value); break;
                case 'p': p = num(value); break;
                case 'n': n = mpz_get_si(num(value).get_mpz_t()); break;
                default: throw bad("unknown entry \"" + part + "\"");
            }
        }
        if (m == 0 || p == 0 || n < 0) throw bad("radical needs m, p and n");
        return FieldDescriptor{PureRadical{m, p, n}};
    }
    throw bad("unknown kind \"" + kind + "\"");
}

std::vector<FixtureRecord> parse_fixtures(std::istream& in) {
    std::vector<FixtureRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError(
                "fixtures line " + std::to_string(lineno) + ": " + e.what(),
                lineno);
        }
        const auto fail = [&](const std::string& why) {
            return ParseError(
                "fixtures line " + std::to_string(lineno) + ": " + why,
                lineno);
        };
        if (!j.is_object() || !j.contains("label") || !j.contains("model") ||
            !j.contains("expected"))
            throw fail("record needs label, model and expected");
        FixtureRecord rec;
        rec.label = j["label"].get<std::string>();
        try {
            rec.model = parse_curve(j["model"].get<std::string>());
        } catch (const ParseError& e) {
            throw fail(e.what());
        }
        for (const json& h : j.value("hints", json::array())) {
            if (h.is_number_integer())
                rec.hints.push_back(
                    Integer(static_cast<long>(h.get<long long>())));
            else
                rec.hints.push_back(
                    parse_integer(h.get<std::string>(), lineno));
        }
        if (!j["expected"].is_array() || j["expected"].empty())
            throw fail("expected must be a nonempty array");
        for (const json& a : j["expected"]) {
            if (!a.contains("key") || !a.contains("value") ||
                !a.contains("provenance"))
                throw fail("assertion needs key, value and provenance");
            FixtureAssertion fa{a["key"].get<std::string>(),
                                a["value"].get<std::string>(),
                                a["provenance"].get<std::string>()};
            if (fa.provenance.empty()) throw fail("empty provenance");
            if (!known_key(fa.key))
                throw fail("unknown assertion key \"" + fa.key + "\"");
            rec.expected.push_back(std::move(fa));
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<FixtureRecord> load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open fixtures file " + path, 0);
    return parse_fixtures(in);
}

FixtureReport run_fixtures(const std::vector<FixtureRecord>& records) {
    FixtureReport report;
    for (const FixtureRecord& rec : records) {
        for (const FixtureAssertion& fa : rec.expected) {
            AssertionResult res;
            res.label = rec.label;
            res.key = fa.key;
            res.expected = fa.value;
            res.provenance = fa.provenance;
            try {
                res.got = evaluate(rec, fa.key);
            } catch (const std::exception& e) {
                res.got = std::string("error: ") + e.what();
            }
            res.passed = res.got == res.expected;
            ++(res.passed ? report.passed : report.failed);
            report.results.push_back(std::move(res));
        }
    }
    return report;
}

FixtureReport run_fixtures(const std::string& path) {
    return run_fixtures(load_fixtures(path));
}

}  // namespace rootno
