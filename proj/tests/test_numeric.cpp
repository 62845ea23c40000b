#include <doctest.h>

#include "symcube/numeric.hpp"

using namespace symcube;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(17, 2) == 136);
    CHECK(binomial(37, 3) == 7770);
    CHECK(binomial(38, 3) == 8436);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(66, 4) == 720720);
    CHECK(binomial(67, 4) == 766480);  // C(8^2 + 3, 4)
}

TEST_CASE("rational string round trip") {
    for (const char* s : {"0", "1", "-1", "3/4", "-22/7", "1000000000000000000001"}) {
        Rat r = rat_from_string(s);
        CHECK(rat_to_string(r) == s);
    }
    CHECK(rat_from_string("4/8") == Rat(1, 2));
}

TEST_CASE("gaussian arithmetic is a field") {
    Gaussian i = Gaussian::i();
    CHECK(i * i == Gaussian(-1));
    Gaussian a(Rat(1), Rat(1));   // 1 + i
    Gaussian b(Rat(1), Rat(-1));  // 1 - i
    CHECK(a * b == Gaussian(2));
    CHECK(a / b == i);
    CHECK((a - a).is_zero());
    Gaussian c(Rat(2, 3), Rat(-5, 7));
    CHECK(c / c == Gaussian(1));
    CHECK(c * Gaussian(1) == c);
    CHECK((c + (-c)).is_zero());
}

TEST_CASE("gaussian parsing and printing") {
    CHECK(gaussian_to_string(Gaussian(1)) == "1");
    CHECK(gaussian_to_string(Gaussian::i()) == "i");
    CHECK(gaussian_to_string(-Gaussian::i()) == "-i");
    CHECK(gaussian_to_string(Gaussian(Rat(1), Rat(1))) == "1+i");
    CHECK(gaussian_to_string(Gaussian(Rat(2), Rat(-3, 4))) == "2-3/4i");
    for (const char* s : {"1/2", "-i", "1+i", "2-3/4i", "0", "-5/3-2i", "7i"}) {
        Gaussian g = gaussian_from_string(s);
        CHECK(gaussian_to_string(g) == s);
    }
    CHECK(gaussian_from_string("0+0i").is_zero());
    CHECK_THROWS_AS((void)gaussian_from_string("2+"), parse_error);
    CHECK_THROWS_AS((void)gaussian_from_string(""), parse_error);
}

TEST_CASE("laurent polynomial arithmetic") {
    Laurent e = Laurent::monomial(1, Gaussian(1));
    Laurent einv = Laurent::monomial(-1, Gaussian(1));
    CHECK(e * einv == Laurent(1));
    Laurent p = e + Laurent(1);              // 1 + e
    Laurent q = p * p;                       // 1 + 2e + e^2
    CHECK(q.coefficient(0) == Gaussian(1));
    CHECK(q.coefficient(1) == Gaussian(2));
    CHECK(q.coefficient(2) == Gaussian(1));
    CHECK(q.min_degree() == 0);
    CHECK(q.max_degree() == 2);
    CHECK((p - p).is_zero());
    Laurent r = Laurent::monomial(-2, Gaussian(Rat(1), Rat(1))) - einv;
    CHECK(r.min_degree() == -2);
    CHECK((-r + r).is_zero());
}

TEST_CASE("laurent printing and parsing") {
    Laurent l = Laurent::monomial(-2, Gaussian(Rat(1, 3))) +
                Laurent::monomial(1, Gaussian(Rat(2), Rat(1)));
    std::string s = l.to_string();
    CHECK(Laurent::parse(s) == l);
    CHECK(Laurent::parse("0").is_zero());
    CHECK(Laurent::parse("1/3*e^-2 + (2+i)*e") == l);
    Laurent c = Laurent(Gaussian(Rat(0), Rat(-1)));
    CHECK(Laurent::parse(c.to_string()) == c);
}
