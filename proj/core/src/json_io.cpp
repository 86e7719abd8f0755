#include "satake/json_io.hpp"

#include <fstream>
#include <sstream>

namespace satake {

json quad_to_json(const QuadScalar& x) {
    return json{{"a", rat_to_string(x.rational_part())},
                {"b", rat_to_string(x.sqrt_part())},
                {"p", x.prime()}};
}

QuadScalar quad_from_json(const json& j) {
    Rat a = rat_from_string(j.at("a").get<std::string>());
    Rat b = rat_from_string(j.at("b").get<std::string>());
    unsigned long p = j.at("p").get<unsigned long>();
    if (b == 0) return QuadScalar(a);
    return QuadScalar(a, b, p);
}

json laurent_to_json(const LaurentPoly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back(json{{"exp", e}, {"coeff", quad_to_json(c)}});
    return json{{"schema", 1}, {"n", f.arity()}, {"terms", terms}};
}

json hecke_to_json(const HeckeElement& h) {
    json terms = json::array();
    for (const auto& [l, c] : h.terms())
        terms.push_back(json{{"lambda", l}, {"coeff", quad_to_json(c)}});
    return json{{"schema", 1}, {"n", h.arity()}, {"p", h.prime()}, {"terms", terms}};
}

json quotient_to_json(const QuotientModule& q) {
    json ops = json::array();
    for (const auto& m : q.mult_ops) {
        json rows = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < m.cols(); ++j) row.push_back(quad_to_json(m.at(i, j)));
            rows.push_back(row);
        }
        ops.push_back(rows);
    }
    return json{{"schema", 1},
                {"n", q.n},
                {"p", q.p},
                {"dim", q.dim},
                {"basis_tags", q.basis_tags},
                {"mult_ops", ops}};
}

json character_to_json(const UnramifiedCharacter& chi) {
    json coords = json::array();
    for (const auto& c : chi) coords.push_back(quad_to_json(c));
    return coords;
}

json multiset_to_json(const CharacterMultiset& ms) {
    json out = json::array();
    for (const auto& [chi, mult] : ms)
        out.push_back(json{{"character", character_to_json(chi)}, {"multiplicity", mult}});
    return out;
}

json verify_report_to_json(const OrbitPoint& chi, const VerifyReport& r) {
    return json{{"schema", 1},
                {"chi", character_to_json(chi)},
                {"regular", r.regular},
                {"w_module_factors", multiset_to_json(r.w_module_factors)},
                {"principal_series_factors", multiset_to_json(r.principal_series_factors)},
                {"match", r.match}};
}

json orbit_to_json(const WOrbit& o) {
    json points = json::array();
    for (const auto& point : o.points) points.push_back(character_to_json(point));
    return json{{"schema", 1}, {"points", points}, {"regular", is_regular(o)}};
}

namespace {

std::string partition_key(const Partition& l) {
    std::ostringstream os;
    for (size_t i = 0; i < l.size(); ++i) {
        if (i) os << ",";
        os << l[i];
    }
    return os.str();
}

}  // namespace

OracleCache::OracleCache(std::string path) : path_(std::move(path)) {
    load();
}

void OracleCache::load() {
    root_ = json{{"schema", 1}, {"entries", json::array()}};
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return;
    json parsed;
    try {
        in >> parsed;
    } catch (const json::parse_error&) {
        throw std::runtime_error("oracle cache is corrupt: " + path_);
    }
    if (!parsed.is_object() || parsed.value("schema", 0) != 1) return;  // regenerate
    if (!parsed.contains("entries") || !parsed["entries"].is_array())
        throw std::runtime_error("oracle cache is corrupt: " + path_);
    root_ = parsed;
}

void OracleCache::save() const {
    if (path_.empty()) return;
    std::ofstream out(path_);
    out << root_.dump(2) << "\n";
}

std::map<Partition, long> OracleCache::get(const Partition& lambda, const Partition& mu,
                                           unsigned long p, bool* hit) {
    int n = static_cast<int>(lambda.size());
    for (const auto& entry : root_["entries"]) {
        if (entry.value("n", -1) != n) continue;
        if (entry.value("p", 0ul) != p) continue;
        if (entry.at("lambda").get<Partition>() != lambda) continue;
        if (entry.at("mu").get<Partition>() != mu) continue;
        std::map<Partition, long> result;
        for (const auto& [key, count] : entry.at("result").items()) {
            Partition nu;
            std::istringstream is(key);
            std::string tok;
            while (std::getline(is, tok, ',')) nu.push_back(std::stoi(tok));
            result[nu] = count.get<long>();
        }
        if (hit) *hit = true;
        return result;
    }
    if (hit) *hit = false;
    std::map<Partition, long> result = convolve_oracle(lambda, mu, p);
    json rj = json::object();
    for (const auto& [nu, c] : result) rj[partition_key(nu)] = c;
    root_["entries"].push_back(json{
        {"n", n}, {"p", p}, {"lambda", lambda}, {"mu", mu}, {"result", rj}});
    save();
    return result;
}

}  // namespace satake
