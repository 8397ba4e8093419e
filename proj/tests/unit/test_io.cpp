#include "doctest.h"
#include "suq2/fourier/fourier.hpp"
#include "suq2/io/json.hpp"
#include "suq2/verify/suites.hpp"

using namespace suq2;
using cqalg::Spin;
using qarith::q_int;
using qarith::QRadical;
using qarith::QScalar;

TEST_SUITE("io") {

TEST_CASE("scalar encodings") {
    CHECK(io::to_json(mpq_class(3, 4)) == "3/4");
    CHECK(io::rational_from_json("-5/6") == mpq_class(-5, 6));
    QScalar x = q_int(6) / q_int(4);
    CHECK(io::qscalar_from_json(io::to_json(x)) == x);
    QRadical r = QRadical::sqrt(q_int(6)) * QScalar(2) + QRadical(1);
    CHECK(io::qradical_from_json(io::to_json(r)) == r);
    CHECK_THROWS(io::monomial_from_json(nlohmann::json::parse(R"(["x", 1, 0, 0])")));
}

TEST_CASE("element and transform round trip") {
    verify::RandomSampler s(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = s.element(3);
        CHECK(io::element_from_json(io::to_json(f)) == f);
        auto F = fourier::fourier_transform(f);
        CHECK(io::exact_fourier_from_json(io::to_json(F)) == F);
        auto text = io::to_json(F).dump();
        CHECK(io::exact_fourier_from_json(nlohmann::json::parse(text)) == F);
    }
}

TEST_CASE("spin block round trip") {
    const auto& b = cqalg::spin_block(Spin(3));
    auto back = io::spin_block_from_json(io::to_json(b));
    CHECK(back.l == b.l);
    CHECK(back.N == b.N);
    CHECK(back.u == b.u);
}

}
