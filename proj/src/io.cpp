#include "semistab/io.hpp"

#include <fstream>
#include <sstream>

#include "semistab/numtheory.hpp"

namespace semistab {

using nlohmann::json;

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    throw ParseError("expected an exact rational (string \"p/q\" or integer), got: " + j.dump());
}

json rational_json(const Rational& r) { return json(r.str()); }

namespace {

mpz_class integer_from_json(const json& j, const char* what) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
    throw ParseError(std::string("expected an integer for ") + what);
}

UnityRoot twist_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("n"))
        throw ParseError("twist must be an object {\"k\": ..., \"n\": ...}");
    const mpz_class k = integer_from_json(j.at("k"), "twist k");
    const mpz_class n = integer_from_json(j.at("n"), "twist n");
    if (n <= 0) throw ParseError("twist order must be positive");
    return UnityRoot(k, n);
}

RationalMatrix rational_body_from_json(const json& rows, int rank) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != rank)
        throw ParseError("matrix must have exactly rank rows");
    std::vector<Rational> entries;
    entries.reserve(static_cast<size_t>(rank) * rank);
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != rank)
            throw ParseError("matrix rows must have exactly rank entries");
        for (const auto& e : row) entries.push_back(rational_from_json(e));
    }
    return RationalMatrix(rank, std::move(entries));
}

bool has_cyclotomic_entry(const json& rows) {
    for (const auto& row : rows)
        for (const auto& e : row)
            if (e.is_array()) return true;
    return false;
}

// A cyclotomic matrix is accepted when it factors as zeta_N^j * rational;
// that is the exact shape every representation in scope has.
TwistedMatrix factor_cyclotomic_matrix(const json& rows, int rank, long conductor) {
    std::vector<CyclotomicNumber> entries;
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != rank)
            throw ParseError("matrix rows must have exactly rank entries");
        for (const auto& e : row) {
            if (e.is_array()) {
                std::vector<Rational> coeffs;
                for (const auto& c : e) coeffs.push_back(rational_from_json(c));
                entries.push_back(CyclotomicNumber::from_coeffs(conductor, std::move(coeffs)));
            } else {
                entries.push_back(CyclotomicNumber(rational_from_json(e)));
            }
        }
    }
    for (long j = 0; j < conductor; ++j) {
        const CyclotomicNumber unscale =
            CyclotomicNumber::from_unity_root(UnityRoot(j, conductor).inverse(), conductor);
        std::vector<Rational> body;
        body.reserve(entries.size());
        bool ok = true;
        for (const auto& e : entries) {
            const CyclotomicNumber scaled = unscale * e.promoted(conductor);
            if (!scaled.is_rational()) {
                ok = false;
                break;
            }
            body.push_back(scaled.rational_part());
        }
        if (ok) return TwistedMatrix(UnityRoot(j, conductor), RationalMatrix(rank, std::move(body)));
    }
    throw UnsupportedMatrix(
        "cyclotomic matrix is not a root of unity times a rational matrix");
}

TwistedMatrix matrix_from_json(const json& j, int rank, long conductor) {
    if (j.is_array()) {
        if (has_cyclotomic_entry(j)) {
            if (conductor <= 0)
                throw ParseError("cyclotomic entries require a top-level \"conductor\"");
            return factor_cyclotomic_matrix(j, rank, conductor);
        }
        return TwistedMatrix(rational_body_from_json(j, rank));
    }
    if (j.is_object() && j.contains("body")) {
        const UnityRoot twist = j.contains("twist") ? twist_from_json(j.at("twist")) : UnityRoot();
        const json& body = j.at("body");
        if (has_cyclotomic_entry(body)) {
            if (conductor <= 0)
                throw ParseError("cyclotomic entries require a top-level \"conductor\"");
            const TwistedMatrix factored = factor_cyclotomic_matrix(body, rank, conductor);
            return TwistedMatrix(twist * factored.twist(), factored.body());
        }
        return TwistedMatrix(twist, rational_body_from_json(body, rank));
    }
    throw ParseError("matrix must be a row array or {\"twist\": ..., \"body\": ...}");
}

int int_field(const json& j, const char* name) {
    if (!j.contains(name) || !j.at(name).is_number_integer())
        throw ParseError(std::string("missing integer field \"") + name + "\"");
    return j.at(name).get<int>();
}

SurfaceRepresentation parse_single(const json& j) {
    const int genus = int_field(j, "genus");
    const int punctures = int_field(j, "punctures");
    const int rank = int_field(j, "rank");
    long conductor = 0;
    if (j.contains("conductor")) conductor = j.at("conductor").get<long>();

    auto matrices = [&](const char* name, int expected) {
        if (!j.contains(name) || !j.at(name).is_array())
            throw ParseError(std::string("missing matrix list \"") + name + "\"");
        const json& list = j.at(name);
        if (static_cast<int>(list.size()) != expected)
            throw ParseError(std::string("\"") + name + "\" must hold " +
                             std::to_string(expected) + " matrices");
        std::vector<TwistedMatrix> out;
        for (const auto& mj : list) out.push_back(matrix_from_json(mj, rank, conductor));
        return out;
    };
    try {
        return SurfaceRepresentation(genus, punctures, rank, matrices("A", genus),
                                     matrices("B", genus), matrices("C", punctures));
    } catch (const DimensionMismatch& e) {
        throw ParseError(e.what());
    } catch (const ShapeMismatch& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

RepInput parse_representation(const json& j) {
    if (!j.is_object()) throw ParseError("representation file must be a JSON object");
    if (j.contains("sum")) {
        if (!j.at("sum").is_array() || j.at("sum").empty())
            throw ParseError("\"sum\" must be a nonempty array of representations");
        std::vector<SurfaceRepresentation> parts;
        for (const auto& sj : j.at("sum")) parts.push_back(parse_single(sj));
        try {
            return DirectSumRepresentation(std::move(parts));
        } catch (const ShapeMismatch& e) {
            throw ParseError(e.what());
        }
    }
    return parse_single(j);
}

RepInput parse_representation_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_representation(j);
}

RepInput load_representation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_representation_text(buf.str());
}

namespace {

json matrix_json(const TwistedMatrix& m) {
    json body = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(rational_json(m.body().at(i, j)));
        body.push_back(std::move(row));
    }
    json twist;
    if (m.twist().k().fits_slong_p() && m.twist().order().fits_slong_p()) {
        twist["k"] = m.twist().k().get_si();
        twist["n"] = m.twist().order().get_si();
    } else {
        twist["k"] = m.twist().k().get_str();
        twist["n"] = m.twist().order().get_str();
    }
    json out;
    out["body"] = std::move(body);
    out["twist"] = std::move(twist);
    return out;
}

}  // namespace

json representation_json(const SurfaceRepresentation& rep) {
    json out;
    out["genus"] = rep.genus;
    out["punctures"] = rep.punctures;
    out["rank"] = rep.rank;
    out["A"] = json::array();
    out["B"] = json::array();
    out["C"] = json::array();
    for (const auto& x : rep.A) out["A"].push_back(matrix_json(x));
    for (const auto& x : rep.B) out["B"].push_back(matrix_json(x));
    for (const auto& x : rep.C) out["C"].push_back(matrix_json(x));
    return out;
}

json representation_json(const RepInput& input) {
    if (std::holds_alternative<SurfaceRepresentation>(input))
        return representation_json(std::get<SurfaceRepresentation>(input));
    json parts = json::array();
    for (const auto& s : std::get<DirectSumRepresentation>(input).summands)
        parts.push_back(representation_json(s));
    json out;
    out["sum"] = std::move(parts);
    return out;
}

std::string serialize_representation(const RepInput& input) {
    return representation_json(input).dump(2) + "\n";
}

void save_representation(const RepInput& input, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << serialize_representation(input);
}

}  // namespace semistab
