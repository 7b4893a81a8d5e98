#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "omlprob/rational.hpp"

using omlprob::Rat;

namespace {

// Reference fraction over long long, reduced with std::gcd.
struct Frac {
  long long n, d;
  Frac(long long num, long long den) : n(num), d(den) {
    if (d < 0) n = -n, d = -d;
    const long long g = std::gcd(n < 0 ? -n : n, d);
    n /= g;
    d /= g;
  }
  std::string str() const { return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d); }
};

Frac add(Frac a, Frac b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
Frac sub(Frac a, Frac b) { return {a.n * b.d - b.n * a.d, a.d * b.d}; }
Frac mul(Frac a, Frac b) { return {a.n * b.n, a.d * b.d}; }
Frac div(Frac a, Frac b) { return {a.n * b.d, a.d * b.n}; }

}  // namespace

TEST_CASE("parse and print canonical forms") {
  CHECK(Rat::parse("2/4").str() == "1/2");
  CHECK(Rat::parse("-6/3").str() == "-2");
  CHECK(Rat::parse("0/7").str() == "0");
  CHECK(Rat::parse("5").str() == "5");
  CHECK(Rat(4, 6) == Rat::parse("2/3"));
  std::ostringstream os;
  os << Rat(-3, 9);
  CHECK(os.str() == "-1/3");
}

TEST_CASE("malformed text is rejected") {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", " 1/2", "1/2 ", "1.5", "1//2", "--1", "3/-6"})
    CHECK_THROWS_AS(Rat::parse(bad), std::invalid_argument);
}

TEST_CASE("arithmetic agrees with a reference fraction type") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> num(-40, 40), den(1, 40);
  for (int i = 0; i < 2000; ++i) {
    const Frac fa(num(rng), den(rng)), fb(num(rng), den(rng));
    const Rat a = Rat::parse(fa.str()), b = Rat::parse(fb.str());
    CHECK((a + b).str() == add(fa, fb).str());
    CHECK((a - b).str() == sub(fa, fb).str());
    CHECK((a * b).str() == mul(fa, fb).str());
    if (fb.n != 0) CHECK((a / b).str() == div(fa, fb).str());
    CHECK((a < b) == (fa.n * fb.d < fb.n * fa.d));
    CHECK((a == b) == (fa.n == fb.n && fa.d == fb.d));
  }
}

TEST_CASE("division by zero throws") { CHECK_THROWS(Rat(1) / Rat(0)); }

TEST_CASE("integers grow past 64 bits without loss") {
  Rat x(1);
  for (int i = 0; i < 100; ++i) x *= Rat(3);
  Rat y = x / Rat(3);
  for (int i = 0; i < 99; ++i) y /= Rat(3);
  CHECK(y == Rat(1));
  CHECK(x.str().size() == 48);  // 3^100 has 48 digits
  CHECK((x + Rat(1, 2)).denominator_str() == "2");
}

TEST_CASE("sign, abs and integer tests") {
  CHECK(Rat(-1, 3).sign() == -1);
  CHECK(Rat(-1, 3).abs() == Rat(1, 3));
  CHECK(Rat(0).is_zero());
  CHECK(Rat(4, 2).is_integer());
  CHECK_FALSE(Rat(1, 2).is_integer());
  CHECK(omlprob::in_unit_interval(Rat(0)));
  CHECK(omlprob::in_unit_interval(Rat(1)));
  CHECK_FALSE(omlprob::in_unit_interval(Rat(101, 100)));
}
