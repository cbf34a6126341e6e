#include <doctest.h>

#include "linobs/scalar.hpp"

#include <random>
#include <set>

using namespace linobs;

namespace {

Scalar random_scalar(const Field& f, std::mt19937& rng) {
    std::uniform_int_distribution<int> small(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    switch (f.kind()) {
        case FieldKind::cyclotomic: {
            Scalar acc = Scalar::zero(f);
            Scalar z = Scalar::one(f);
            for (std::size_t d = 0; d < f.extension_degree(); ++d) {
                acc += Scalar::from_rational(f, mpq_class(small(rng), den(rng))) * z;
                z *= Scalar::zeta(f);
            }
            return acc;
        }
        case FieldKind::ratfun: {
            const auto& vars = *f.variable_names();
            Scalar num = Scalar::from_int(f, small(rng));
            Scalar den_s = Scalar::from_int(f, den(rng));
            for (const auto& v : vars) {
                num += Scalar::from_int(f, small(rng)) * Scalar::variable(f, v);
                den_s += Scalar::from_int(f, den(rng)) * Scalar::variable(f, v).pow(2);
            }
            return num / den_s;
        }
        default: return Scalar::from_rational(f, mpq_class(small(rng), den(rng)));
    }
}

std::vector<Field> sample_fields() {
    return {field_make(FieldDescriptor::rational()), field_make(FieldDescriptor::prime(7)),
            field_make(FieldDescriptor::prime(101)), field_make(FieldDescriptor::cyclotomic(12)),
            field_make(FieldDescriptor::cyclotomic(5)), field_make(FieldDescriptor::ratfun({"z", "w"}))};
}

}  // namespace

TEST_CASE("field_make examples") {
    const Field q = field_make(FieldDescriptor::rational());
    CHECK(parse_scalar(q, "1/2") + parse_scalar(q, "1/3") == parse_scalar(q, "5/6"));

    const Field f7 = field_make(FieldDescriptor::prime(7));
    CHECK((Scalar::from_int(f7, 3) * Scalar::from_int(f7, 5)).is_one());

    const Field c4 = field_make(FieldDescriptor::cyclotomic(4));
    CHECK(Scalar::zeta(c4) * Scalar::zeta(c4) == Scalar::from_int(c4, -1));
}

TEST_CASE("field_make rejects bad descriptors") {
    CHECK_THROWS_AS(field_make(FieldDescriptor::prime(9)), std::invalid_argument);
    CHECK_THROWS_AS(field_make(FieldDescriptor::prime(1)), std::invalid_argument);
    CHECK_THROWS_AS(field_make(FieldDescriptor::cyclotomic(0)), std::invalid_argument);
    CHECK_THROWS_AS(field_make(FieldDescriptor::ratfun({"z", "z"})), std::invalid_argument);
}

TEST_CASE("descriptor text round trip") {
    for (const char* text : {"rational", "fp:7", "cyclotomic:12", "ratfun:z,w"}) {
        CHECK(FieldDescriptor::parse(text).to_string() == text);
    }
    CHECK_THROWS(FieldDescriptor::parse("reals"));
}

TEST_CASE("cyclotomic polynomials") {
    const Field c12 = field_make(FieldDescriptor::cyclotomic(12));
    // Phi_12 = x^4 - x^2 + 1
    const std::vector<mpq_class> expect{1, 0, -1, 0, 1};
    CHECK(c12.cyclotomic_modulus() == expect);
    CHECK(field_make(FieldDescriptor::cyclotomic(1)).extension_degree() == 1);
    CHECK(field_make(FieldDescriptor::cyclotomic(2)).extension_degree() == 1);
}

TEST_CASE("torsion_order examples") {
    const Field q = field_make(FieldDescriptor::rational());
    CHECK(torsion_order(Scalar::from_int(q, -1)) == 2u);
    CHECK(!torsion_order(Scalar::from_int(q, 2)).has_value());
    CHECK_THROWS_AS(torsion_order(Scalar::zero(q)), std::domain_error);

    const Field c12 = field_make(FieldDescriptor::cyclotomic(12));
    CHECK(torsion_order(Scalar::zeta(c12)) == 12u);
    CHECK(torsion_order(-Scalar::zeta(c12)) == 12u);
    CHECK(torsion_order(Scalar::zeta(c12).pow(4)) == 3u);

    const Field f7 = field_make(FieldDescriptor::prime(7));
    CHECK(torsion_order(Scalar::from_int(f7, 3)) == 6u);
    CHECK(torsion_order(Scalar::from_int(f7, 2)) == 3u);

    const Field c3 = field_make(FieldDescriptor::cyclotomic(3));
    // -zeta_3 is a primitive 6th root of unity.
    CHECK(torsion_order(-Scalar::zeta(c3)) == 6u);
}

TEST_CASE("torsion order is minimal") {
    std::mt19937 rng(7);
    for (const auto& f : {field_make(FieldDescriptor::prime(31)), field_make(FieldDescriptor::cyclotomic(20))}) {
        for (int trial = 0; trial < 60; ++trial) {
            Scalar x = f.kind() == FieldKind::prime ? Scalar::from_int(f, 1 + trial % 30)
                                                    : Scalar::zeta(f).pow(trial) * Scalar::from_int(f, trial % 2 ? -1 : 1);
            auto e = torsion_order(x);
            REQUIRE(e.has_value());
            CHECK(x.pow(static_cast<long long>(*e)).is_one());
            for (std::uint64_t d = 1; d < *e; ++d) {
                if (*e % d == 0) CHECK_FALSE(x.pow(static_cast<long long>(d)).is_one());
            }
        }
    }
}

TEST_CASE("cyclotomic torsion is exactly +-zeta^j") {
    for (unsigned m = 1; m <= 24; ++m) {
        const Field f = field_make(FieldDescriptor::cyclotomic(m));
        std::set<std::string> roots;
        Scalar z = Scalar::one(f);
        for (unsigned j = 0; j < 2 * m; ++j) {
            roots.insert(z.to_string());
            roots.insert((-z).to_string());
            z *= Scalar::zeta(f);
        }
        const std::size_t deg = f.extension_degree();
        // Coefficient vectors over {-1,0,1} on the first min(deg, 8) powers.
        std::size_t total = 1;
        for (std::size_t i = 0; i < std::min<std::size_t>(deg, 8); ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            Scalar x = Scalar::zero(f);
            Scalar power = Scalar::one(f);
            std::size_t c = code;
            for (std::size_t d = 0; d < std::min<std::size_t>(deg, 8); ++d) {
                x += Scalar::from_int(f, static_cast<long long>(c % 3) - 1) * power;
                power *= Scalar::zeta(f);
                c /= 3;
            }
            if (x.is_zero()) continue;
            const bool is_root = roots.count(x.to_string()) > 0;
            CHECK_MESSAGE(torsion_order(x).has_value() == is_root, "m=" << m << " x=" << x.to_string());
        }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(1234);
    for (const auto& f : sample_fields()) {
        for (int trial = 0; trial < 25; ++trial) {
            const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("Frobenius in prime fields") {
    std::mt19937 rng(99);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 13ULL, 101ULL}) {
        const Field f = field_make(FieldDescriptor::prime(p));
        std::uniform_int_distribution<long long> d(0, static_cast<long long>(p) - 1);
        for (int trial = 0; trial < 40; ++trial) {
            const Scalar a = Scalar::from_int(f, d(rng)), b = Scalar::from_int(f, d(rng));
            const auto e = static_cast<long long>(p);
            CHECK((a + b).pow(e) == a.pow(e) + b.pow(e));
        }
    }
}

TEST_CASE("ratfun_equal examples") {
    const Field f = field_make(FieldDescriptor::ratfun({"z", "w"}));
    const Scalar z = Scalar::variable(f, "z"), w = Scalar::variable(f, "w");
    CHECK(ratfun_equal(((z * z - w * w) / (z - w)).ratfun(), (z + w).ratfun()));
    CHECK_FALSE(ratfun_equal(z.inverse().ratfun(), w.inverse().ratfun()));

    const auto vars = f.variable_names();
    const MultiPoly pz = MultiPoly::variable(vars, "z"), pw = MultiPoly::variable(vars, "w");
    const MultiPoly one(vars, 1);
    const RatFun lhs((one + pz * pz + pw * pw) * mpq_class(2), pz * pw);
    const RatFun rhs(one * mpq_class(2) + pz * pz * mpq_class(2) + pw * pw * mpq_class(2), pz * pw);
    CHECK(ratfun_equal(lhs, rhs));
    CHECK_THROWS_AS(RatFun(pz, MultiPoly(vars)), std::domain_error);
}

TEST_CASE("scalar text syntax") {
    const Field q = field_make(FieldDescriptor::rational());
    CHECK(parse_scalar(q, "-3/4").to_string() == "-3/4");
    CHECK(parse_scalar(q, "\xE2\x88\x92" "3/4").to_string() == "-3/4");
    CHECK(parse_scalar(q, "2^-2").to_string() == "1/4");
    CHECK_THROWS_AS(parse_scalar(q, "z"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar(q, "1/0"), std::domain_error);

    const Field f7 = field_make(FieldDescriptor::prime(7));
    CHECK(parse_scalar(f7, "5").to_string() == "5");
    CHECK(parse_scalar(f7, "12").to_string() == "5");
    CHECK(parse_scalar(f7, "1/2").to_string() == "4");

    const Field c12 = field_make(FieldDescriptor::cyclotomic(12));
    CHECK(parse_scalar(c12, "1+2*z^3").to_string() == "1+2*z^3");
    CHECK(parse_scalar(c12, "z^4").to_string() == "-1+z^2");
    CHECK(parse_scalar(c12, "-1/2*z").to_string() == "-1/2*z");

    const Field c4 = field_make(FieldDescriptor::cyclotomic(4));
    CHECK(parse_scalar(c4, "\xCE\xB6" "4^3") == -Scalar::zeta(c4));
    CHECK(parse_scalar(c4, "zeta2") == Scalar::from_int(c4, -1));
    CHECK_THROWS(parse_scalar(c4, "zeta3"));

    const Field r = field_make(FieldDescriptor::ratfun({"z", "w"}));
    const Scalar b = parse_scalar(r, "2*(1+z^2+w^2)/(z*w)");
    CHECK(parse_scalar(r, b.to_string()).to_string() == b.to_string());
    CHECK(parse_scalar(r, b.to_string()) == b);
}

TEST_CASE("canonical text reparses to the same scalar") {
    std::mt19937 rng(5);
    for (const auto& f : sample_fields()) {
        for (int trial = 0; trial < 20; ++trial) {
            const Scalar x = random_scalar(f, rng);
            const Scalar y = parse_scalar(f, x.to_string());
            CHECK(y == x);
            CHECK(y.to_string() == x.to_string());
        }
    }
}

TEST_CASE("mixing fields is an error") {
    const Field q = field_make(FieldDescriptor::rational());
    const Field f7 = field_make(FieldDescriptor::prime(7));
    CHECK_THROWS_AS(Scalar::one(q) + Scalar::one(f7), std::invalid_argument);
}
