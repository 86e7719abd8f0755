#pragma once

#include <json.hpp>

#include "satake/hecke.hpp"
#include "satake/jacquet.hpp"
#include "satake/quotient.hpp"

namespace satake {

using nlohmann::json;

json quad_to_json(const QuadScalar& x);
QuadScalar quad_from_json(const json& j);

json laurent_to_json(const LaurentPoly& f);
json hecke_to_json(const HeckeElement& h);
json quotient_to_json(const QuotientModule& q);
json character_to_json(const UnramifiedCharacter& chi);
json multiset_to_json(const CharacterMultiset& ms);
json verify_report_to_json(const OrbitPoint& chi, const VerifyReport& r);
json orbit_to_json(const WOrbit& o);

// Append-only structure-constant cache, keyed by (n, p, lambda, mu). A file
// with a different schema version is ignored and regenerated.
class OracleCache {
public:
    explicit OracleCache(std::string path);

    // returns cached constants, or computes via convolve_oracle and persists
    std::map<Partition, long> get(const Partition& lambda, const Partition& mu,
                                  unsigned long p, bool* hit = nullptr);

    const std::string& path() const { return path_; }

private:
    std::string path_;
    json root_;
    void load();
    void save() const;
};

}  // namespace satake
