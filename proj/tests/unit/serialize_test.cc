#include <muig/builder.hh>
#include <muig/errors.hh>
#include <muig/serialize.hh>

#include <doctest.h>

using namespace muig;

TEST_CASE("representation JSON round trip")
{
    Representation rep{Interval(Rational(-1, 2), Rational(1, 2), BoundaryType::open_closed), Interval(Rational(0), Rational(1), BoundaryType::closed_open)};
    auto text = representation_to_json(rep).dump();
    CHECK(text == R"({"0":{"lo":"-1/2","hi":"1/2","type":"open_closed"},"1":{"lo":"0","hi":"1","type":"closed_open"}})");
    CHECK(representation_from_json(text) == rep);
    CHECK(representation_from_json(R"({"verdict":"mixed-unit","representation":)" + text + "}") == rep);
}

TEST_CASE("representation JSON errors")
{
    CHECK_THROWS_AS(representation_from_json("{"), ParseError);
    CHECK_THROWS_AS(representation_from_json("[]"), ParseError);
    CHECK_THROWS_AS(representation_from_json(R"({"1":{"lo":"0","hi":"1","type":"closed"}})"), ParseError);
    CHECK_THROWS_AS(representation_from_json(R"({"0":{"lo":"0.5","hi":"1","type":"closed"}})"), ParseError);
    CHECK_THROWS_AS(representation_from_json(R"({"0":{"lo":"1","hi":"1","type":"closed"}})"), ParseError);
    CHECK_THROWS_AS(representation_from_json(R"({"0":{"lo":"0","hi":"1","type":"ajar"}})"), ParseError);
    try {
        representation_from_json("{\n\"0\": ]");
        FAIL("accepted");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("certificate JSON carries verdict and payload")
{
    auto pos = certificate_to_json(build_certificate(star_graph(3)));
    CHECK(pos["verdict"] == "mixed-unit");
    CHECK(pos["representation"].size() == 4);
    CHECK(pos["transcript"]["bad_pairs"] == 1);

    auto neg = certificate_to_json(build_certificate(star_graph(4)));
    CHECK(neg["verdict"] == "not-mixed-unit");
    CHECK(neg["embedding"]["family"] == "R_0");
    CHECK(neg["embedding"]["map"].size() == 5);
    CHECK(! neg.contains("representation"));
}
