#include <orthogen/json_io.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace orthogen::json {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<Rational> decode_rationals(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected an array of rationals");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& e : j)
        out.push_back(decode_rational(e));
    return out;
}

Json encode_rationals(const std::vector<Rational>& v)
{
    Json out = Json::array();
    for (const auto& r : v)
        out.push_back(encode(r));
    return out;
}

const char* check_name(OrthoCheck c)
{
    switch (c) {
    case OrthoCheck::off_diagonal: return "off_diagonal";
    case OrthoCheck::norm_product: return "norm_product";
    case OrthoCheck::positivity: return "positivity";
    }
    return "unknown";
}

} // namespace

Json encode(const Rational& r) { return to_string(r); }

Rational decode_rational(const Json& j)
{
    if (!j.is_string())
        throw std::invalid_argument("rationals must be JSON strings, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

Json encode(const PolyX& p) { return encode_rationals(p.coeffs()); }

PolyX decode_poly(const Json& j) { return PolyX(decode_rationals(j)); }

Json encode(const MonicFamily& f)
{
    Json polys = Json::array();
    for (const auto& p : f.polys())
        polys.push_back(encode(p));
    return Json{{"polys", std::move(polys)}};
}

MonicFamily decode_family(const Json& j)
{
    const Json& polys = field(j, "polys");
    if (!polys.is_array())
        throw std::invalid_argument("'polys' must be an array");
    std::vector<PolyX> out;
    for (const auto& p : polys)
        out.push_back(decode_poly(p));
    return MonicFamily(std::move(out));
}

Json encode(const CoeffRule& rule)
{
    if (const auto* abc = std::get_if<AbcRule>(&rule))
        return Json{{"kind", "abc"}, {"a", encode(abc->a)}, {"b", encode(abc->b)}, {"c", encode(abc->c)}};
    if (const auto* e = std::get_if<ExplicitRule>(&rule))
        return Json{{"kind", "explicit"}, {"values", encode_rationals(e->values)}};
    const auto& named = std::get<NamedRule>(rule);
    switch (named.kind) {
    case NamedKind::exp:
        return Json{{"kind", "named"}, {"name", "exp"}, {"a", encode(named.param)}};
    case NamedKind::geometric:
        return Json{{"kind", "named"}, {"name", "geometric"}, {"b", encode(named.param)}};
    case NamedKind::log:
        return Json{{"kind", "named"}, {"name", "log"}, {"b", encode(named.param)}};
    }
    throw std::logic_error("unknown named rule");
}

CoeffRule decode_rule(const Json& j)
{
    const std::string kind = field(j, "kind").get<std::string>();
    CoeffRule rule;
    if (kind == "abc") {
        // Decode into locals so a throwing field cannot leak earlier members.
        Rational a = decode_rational(field(j, "a"));
        Rational b = decode_rational(field(j, "b"));
        Rational c = decode_rational(field(j, "c"));
        rule = AbcRule{std::move(a), std::move(b), std::move(c)};
    } else if (kind == "explicit") {
        rule = ExplicitRule{decode_rationals(field(j, "values"))};
    } else if (kind == "named") {
        const std::string name = field(j, "name").get<std::string>();
        if (name == "exp")
            rule = NamedRule{NamedKind::exp, decode_rational(field(j, "a"))};
        else if (name == "geometric")
            rule = NamedRule{NamedKind::geometric, decode_rational(field(j, "b"))};
        else if (name == "log")
            rule = NamedRule{NamedKind::log, decode_rational(field(j, "b"))};
        else
            throw std::invalid_argument("unknown named rule '" + name + "'");
    } else {
        throw std::invalid_argument("unknown rule kind '" + kind + "'");
    }
    validate(rule);
    return rule;
}

Json encode(const GFSpec& spec)
{
    return Json{{"alpha", encode(spec.alpha)}, {"order", spec.order}, {"rule", encode(spec.rule)}};
}

GFSpec decode_gfspec(const Json& j)
{
    GFSpec spec{decode_rule(field(j, "rule")), decode_rational(field(j, "alpha")), 12};
    if (j.contains("order")) {
        const Json& order = j.at("order");
        if (!order.is_number_unsigned())
            throw std::invalid_argument("'order' must be a non-negative integer");
        spec.order = order.get<std::size_t>();
    }
    return spec;
}

Json encode(const Recursion& rec)
{
    return Json{{"betas", encode_rationals(rec.betas)}, {"omegas", encode_rationals(rec.omegas)}};
}

Recursion decode_recursion(const Json& j)
{
    return Recursion(decode_rationals(field(j, "betas")), decode_rationals(field(j, "omegas")));
}

Json encode(const FamilyId& id)
{
    Json out{{"family", family_name(id.kind)}};
    if (id.kind == FamilyKind::ultraspherical)
        out["lambda"] = encode(id.lambda);
    return out;
}

FamilyId decode_family_id(const Json& j)
{
    const FamilyKind kind = parse_family_kind(field(j, "family").get<std::string>());
    if (kind == FamilyKind::ultraspherical)
        return FamilyId::ultraspherical(decode_rational(field(j, "lambda")));
    return FamilyId{kind, Rational(0)};
}

Json encode(const Verdict& v)
{
    if (const auto* h = std::get_if<HermiteVerdict>(&v))
        return Json{{"family", "hermite"}, {"a", encode(h->a)}, {"scale_sq", encode(h->scale_sq)}};
    if (const auto* u = std::get_if<UltrasphericalVerdict>(&v))
        return Json{{"family", "ultraspherical"},
                    {"lambda", encode(u->lambda)},
                    {"b", encode(u->b)},
                    {"scale_sq", encode(u->scale_sq)}};
    if (const auto* t = std::get_if<ChebyshevTVerdict>(&v))
        return Json{{"family", "chebyshev_t"}, {"b", encode(t->b)}, {"scale_sq", encode(t->scale_sq)}};
    const auto& r = std::get<Rejected>(v);
    Json out{{"family", "rejected"}, {"reason", std::string(to_string(r.reason))}};
    if (r.index)
        out["index"] = *r.index;
    return out;
}

Verdict decode_verdict(const Json& j)
{
    const std::string family = field(j, "family").get<std::string>();
    if (family == "hermite") {
        Rational a = decode_rational(field(j, "a"));
        Rational scale_sq = decode_rational(field(j, "scale_sq"));
        return HermiteVerdict{std::move(a), std::move(scale_sq)};
    }
    if (family == "ultraspherical") {
        Rational lambda = decode_rational(field(j, "lambda"));
        Rational b = decode_rational(field(j, "b"));
        Rational scale_sq = decode_rational(field(j, "scale_sq"));
        return UltrasphericalVerdict{std::move(lambda), std::move(b), std::move(scale_sq)};
    }
    if (family == "chebyshev_t") {
        Rational b = decode_rational(field(j, "b"));
        Rational scale_sq = decode_rational(field(j, "scale_sq"));
        return ChebyshevTVerdict{std::move(b), std::move(scale_sq)};
    }
    if (family == "rejected") {
        const auto reason = parse_reject_reason(field(j, "reason").get<std::string>());
        if (!reason)
            throw std::invalid_argument("unknown rejection reason");
        Rejected r{*reason, std::nullopt};
        if (j.contains("index"))
            r.index = j.at("index").get<std::size_t>();
        return r;
    }
    throw std::invalid_argument("unknown verdict family '" + family + "'");
}

Json encode(const OrthogonalityReport& report)
{
    if (report.pass)
        return Json{{"pass", true}, {"order", report.order}, {"diagonal", encode_rationals(report.diagonal)}};
    Json out{{"pass", false}};
    if (report.first_failure)
        out["first_failure"] = Json::array({report.first_failure->first, report.first_failure->second});
    if (report.value)
        out["value"] = encode(*report.value);
    if (report.failed_check)
        out["check"] = check_name(*report.failed_check);
    return out;
}

Json encode(const MomentSeq& mom) { return encode_rationals(mom.moments); }

} // namespace orthogen::json
