#ifndef ORTHOGEN_JSON_IO_HPP
#define ORTHOGEN_JSON_IO_HPP

#include <json.hpp>

#include <orthogen/classify.hpp>
#include <orthogen/families.hpp>
#include <orthogen/favard.hpp>
#include <orthogen/genfun.hpp>
#include <orthogen/orthocheck.hpp>
#include <orthogen/poly.hpp>
#include <orthogen/rational.hpp>

// JSON schemas for every value that crosses a process boundary. Rationals are
// always "p/q" strings; key order is fixed so output is byte-stable.
// Decoders throw std::invalid_argument on schema violations.
namespace orthogen::json {

using Json = nlohmann::ordered_json;

Json encode(const Rational& r);
Rational decode_rational(const Json& j);

// ["c0", "c1", ...] ascending degree.
Json encode(const PolyX& p);
PolyX decode_poly(const Json& j);

// {"polys": [[...], ...]}
Json encode(const MonicFamily& f);
MonicFamily decode_family(const Json& j);

// {"kind": "abc", "a": .., "b": .., "c": ..} | {"kind": "explicit", "values": [..]}
// | {"kind": "named", "name": "exp", "a": ..} | {"kind": "named", "name": "log"|"geometric", "b": ..}
Json encode(const CoeffRule& rule);
CoeffRule decode_rule(const Json& j);

// {"alpha": .., "order": N, "rule": {...}}
Json encode(const GFSpec& spec);
GFSpec decode_gfspec(const Json& j);

// {"betas": [..], "omegas": [..]}
Json encode(const Recursion& rec);
Recursion decode_recursion(const Json& j);

// {"family": "hermite"} or {"family": "ultraspherical", "lambda": "3/2"}
Json encode(const FamilyId& id);
FamilyId decode_family_id(const Json& j);

// {"family": "ultraspherical", "lambda": .., "b": .., "scale_sq": ..}
// {"family": "rejected", "reason": "nonlinear_dn", "index": 4}
Json encode(const Verdict& v);
Verdict decode_verdict(const Json& j);

// {"pass": true, "order": N, "diagonal": [..]}
// {"pass": false, "first_failure": [j, k], "value": "..", "check": "off_diagonal"}
Json encode(const OrthogonalityReport& report);

Json encode(const MomentSeq& mom);

} // namespace orthogen::json

#endif
