#include <doctest.h>

#include <orthogen/json_io.hpp>

#include "support.hpp"

using namespace orthogen;
using namespace orthogen::testing;
using orthogen::json::Json;

TEST_CASE("documented payload shapes")
{
    CHECK(json::encode(Q("-3/4")) == "-3/4");
    CHECK(json::encode(P({"-1", "0", "1"})).dump() == R"(["-1","0","1"])");
    CHECK(json::encode(Recursion(Qs({"0", "0"}), Qs({"1"}))).dump() == R"({"betas":["0","0"],"omegas":["1"]})");
    CHECK(json::encode(Verdict(UltrasphericalVerdict{Q("1/2"), Q("1"), Q("1")})).dump() ==
          R"({"family":"ultraspherical","lambda":"1/2","b":"1","scale_sq":"1"})");
    CHECK(json::encode(Verdict(Rejected{RejectReason::nonlinear_dn, 4})).dump() ==
          R"({"family":"rejected","reason":"nonlinear_dn","index":4})");
    CHECK(json::encode(FamilyId::ultraspherical(Q("3/2"))).dump() == R"({"family":"ultraspherical","lambda":"3/2"})");
    CHECK(json::encode(GFSpec{AbcRule{Q("0"), Q("2"), Q("2")}, Q("1/2"), 12}).dump() ==
          R"({"alpha":"1/2","order":12,"rule":{"kind":"abc","a":"0","b":"2","c":"2"}})");

    OrthogonalityReport fail;
    fail.first_failure = {0, 2};
    fail.value = Rational(1);
    fail.failed_check = OrthoCheck::off_diagonal;
    CHECK(json::encode(fail).dump() == R"({"pass":false,"first_failure":[0,2],"value":"1","check":"off_diagonal"})");
}

TEST_CASE("decoding the documented inputs")
{
    const GFSpec spec = json::decode_gfspec(
        Json::parse(R"({"alpha": "1/2", "order": 12, "rule": {"kind": "abc", "a": "0", "b": "2", "c": "2"}})"));
    CHECK(spec.alpha == Q("1/2"));
    CHECK(spec.order == 12);
    CHECK(spec.rule == CoeffRule{AbcRule{Q("0"), Q("2"), Q("2")}});

    CHECK(json::decode_rule(Json::parse(R"({"kind": "explicit", "values": ["1", "1", "1/2"]})")) ==
          CoeffRule{ExplicitRule{Qs({"1", "1", "1/2"})}});
    CHECK(json::decode_rule(Json::parse(R"({"kind": "named", "name": "log", "b": "2"})")) ==
          CoeffRule{NamedRule{NamedKind::log, Q("2")}});
    CHECK(json::decode_recursion(Json::parse(R"({"betas": ["0","0"], "omegas": ["1"]})")) ==
          Recursion(Qs({"0", "0"}), Qs({"1"})));
}

TEST_CASE("schema violations")
{
    CHECK_THROWS_AS(json::decode_rational(Json(0.5)), std::invalid_argument);
    CHECK_THROWS_AS(json::decode_rational(Json("1/0")), std::invalid_argument);
    CHECK_THROWS_AS(json::decode_rule(Json::parse(R"({"kind": "abc", "a": "1", "b": "0"})")), std::invalid_argument);
    CHECK_THROWS_AS(json::decode_rule(Json::parse(R"({"kind": "abc", "a": "1", "b": "0", "c": "0"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(json::decode_rule(Json::parse(R"({"kind": "named", "name": "sin", "b": "1"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(json::decode_gfspec(Json::parse(R"({"alpha": "1", "order": -2, "rule": {"kind": "named", "name": "exp", "a": "1"}})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(json::decode_family(Json::parse(R"({"polys": [["1"], ["0", "2"]]})")), std::invalid_argument);
    CHECK_THROWS_AS(json::decode_recursion(Json::parse(R"({"betas": ["0"], "omegas": ["1"]})")),
                    std::invalid_argument);
}

TEST_CASE("payloads round trip")
{
    RationalGen gen(64);
    for (int i = 0; i < 30; ++i) {
        const AbcRule abc{gen(), gen(), gen.nonzero()};
        if (is_zero(abc.a) && is_zero(abc.b))
            continue;
        const std::vector<CoeffRule> rules{abc, ExplicitRule{{Rational(1), gen(), gen()}},
                                           NamedRule{NamedKind::exp, gen.nonzero()},
                                           NamedRule{NamedKind::geometric, gen.nonzero()},
                                           NamedRule{NamedKind::log, gen.nonzero()}};
        for (const auto& rule : rules) {
            const GFSpec spec{rule, gen(), static_cast<std::size_t>(i)};
            const GFSpec back = json::decode_gfspec(Json::parse(json::encode(spec).dump()));
            CHECK(back.rule == spec.rule);
            CHECK(back.alpha == spec.alpha);
            CHECK(back.order == spec.order);
        }

        const Verdict verdicts[] = {HermiteVerdict{gen(), gen()}, UltrasphericalVerdict{gen(), gen(), gen()},
                                    ChebyshevTVerdict{gen(), gen()}, Rejected{RejectReason::nonzero_beta, i},
                                    Rejected{RejectReason::alpha_nonpositive, std::nullopt}};
        for (const auto& v : verdicts)
            CHECK(json::decode_verdict(Json::parse(json::encode(v).dump())) == v);

        std::vector<Rational> betas(4), omegas(3);
        for (auto& b : betas)
            b = gen();
        for (auto& w : omegas)
            w = gen();
        const Recursion rec(betas, omegas);
        CHECK(json::decode_recursion(Json::parse(json::encode(rec).dump())) == rec);

        const FamilyId id = FamilyId::ultraspherical(abs(gen.nonzero()));
        CHECK(json::decode_family_id(json::encode(id)) == id);
    }
}
