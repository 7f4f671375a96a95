#include "prframe/io.hpp"

#include "prframe/error.hpp"

#include <fstream>
#include <sstream>

namespace prframe {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

std::vector<RatVector> vectors_from_json(const Json& j, const char* key, std::size_t& n) {
    if (!j.is_object()) parse_error("expected a JSON object");
    if (!j.contains("n") || !j["n"].is_number_unsigned()) parse_error("missing or invalid \"n\"");
    n = j["n"].get<std::size_t>();
    if (n == 0) parse_error("\"n\" must be positive");
    if (!j.contains(key) || !j[key].is_array() || j[key].empty())
        parse_error(std::string("\"") + key + "\" must be a non-empty array");
    std::vector<RatVector> out;
    for (const auto& v : j[key]) out.push_back(vector_from_json(v, n));
    return out;
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    if (!j.is_string()) parse_error("rational entries must be strings or integers, got " + j.dump());
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        parse_error(e.what());
    }
}

Json vector_to_json(const RatVector& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(rational_to_json(q));
    return out;
}

RatVector vector_from_json(const Json& j, std::size_t n) {
    if (!j.is_array()) parse_error("vectors must be arrays");
    if (j.size() != n) parse_error("vector of length " + std::to_string(j.size()) + " where n = " + std::to_string(n));
    RatVector v;
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

Json indices_to_json(IndexSet s) { return indices_to_json(s.indices()); }

Json indices_to_json(const std::vector<std::size_t>& indices) {
    Json out = Json::array();
    for (auto i : indices) out.push_back(i + 1);
    return out;
}

Json frame_to_json(const Frame& frame, const Json& meta) {
    Json vectors = Json::array();
    for (std::size_t i = 0; i < frame.size(); ++i) vectors.push_back(vector_to_json(frame.vector(i)));
    Json out;
    out["n"] = frame.dim();
    out["vectors"] = std::move(vectors);
    out["meta"] = meta;
    return out;
}

Frame frame_from_json(const Json& j) {
    std::size_t n = 0;
    const auto vectors = vectors_from_json(j, "vectors", n);
    return Frame::from_columns(vectors, n);
}

Json subspace_to_json(const Subspace& m) {
    Json basis = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) basis.push_back(vector_to_json(m.basis().column(c)));
    Json out;
    out["n"] = m.ambient_dim();
    out["basis"] = std::move(basis);
    return out;
}

Subspace subspace_from_json(const Json& j) {
    std::size_t n = 0;
    const auto cols = vectors_from_json(j, "basis", n);
    try {
        return Subspace(RatMatrix::from_columns(cols, n));
    } catch (const std::invalid_argument& e) {
        parse_error(e.what());
    }
}

Json witness_to_json(const S2Witness& w) {
    Json out;
    out["x"] = vector_to_json(w.x);
    out["y"] = vector_to_json(w.y);
    out["differing_index"] = w.differing_index ? Json(*w.differing_index + 1) : Json(nullptr);
    return out;
}

Json certificate_to_json(const Certificate& c) {
    Json out;
    out["exact_pr"] = c.exact_pr;
    out["exact_pr_redundancy"] = c.exact_pr_redundancy;
    out["d"] = c.d;
    out["plan"] = c.plan;
    out["seed"] = c.seed.value;
    out["retries"] = c.retries;
    return out;
}

Json verdict_to_json(const MaximalityVerdict& v) {
    Json out;
    out["status"] = status_name(v.status);
    out["reason"] = v.reason;
    if (v.witness) out["witness"] = subspace_to_json(*v.witness);
    out["probe_report"] = {{"attempts", v.probes.attempts}, {"successes", v.probes.successes}};
    return out;
}

RatVector parse_vector_list(const std::string& text) {
    RatVector v;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            v.push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
            parse_error(e.what());
        }
    }
    if (v.empty()) parse_error("empty vector");
    return v;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) parse_error("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        parse_error(path.string() + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
    out << dump(j);
}

}  // namespace prframe
