#include "cusp/config.hpp"
#include "cusp/error.hpp"
#include "test_util.hpp"

using namespace cusp;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("scalar grammar") {
  const CycNumber i = CycNumber::root(CycField::make(4), 1);
  CHECK(parse_scalar("1") == CycNumber(1));
  CHECK(parse_scalar("-1") == CycNumber(-1));
  CHECK(parse_scalar("3/6") == CycNumber(Rational(1, 2)));
  CHECK(parse_scalar("zeta(4)") == i);
  CHECK(parse_scalar("zeta(4)^3") == -i);
  CHECK(parse_scalar("zeta(4)^-1") == -i);
  CHECK(parse_scalar(" zeta(4)^2 * 2/3 ") == CycNumber(Rational(-2, 3)));
  CHECK(parse_scalar("-zeta(4) * 5") == CycNumber(-5) * i);
  const CycNumber z12 = parse_scalar("zeta(3) * zeta(4)");
  CHECK(z12.modulus() == 12);
  CHECK(z12.pow(12) == CycNumber(1));
  CHECK(z12.pow(6) != CycNumber(1));
  for (const char* bad : {"", "zeta(4", "zeta(0)", "zeta(4)^x", "1/0", "abc", "2 *", "zeta(4)3"})
    CHECK(code_of([&] { parse_scalar(bad); }) == ErrorCode::ConfigError);
}

TEST_CASE("run config round trip") {
  RunConfig c;
  c.command = "reduce";
  c.family = "ramified";
  c.q = 5;
  c.sigma = 3;
  c.sigma2 = 1;
  c.A = "zeta(8)^3 * -2";
  c.twist = "zeta(4)";
  c.ell = 7;
  c.ideal = 1;
  c.window = 3;
  c.jobs = 4;
  c.out = "out.json";
  c.format = "csv";
  CHECK(parse_run_config(emit(c)) == c);
  CHECK(parse_run_config(Json::parse(emit(c).dump())) == c);
  RunConfig d;
  d.command = "verify";
  CHECK(parse_run_config(emit(d)) == d);
  CHECK(emit(parse_run_config(emit(c))).dump() == emit(c).dump());
}

TEST_CASE("run config rejects bad input") {
  CHECK(code_of([] { parse_run_config(Json{{"bogus", 1}}); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { parse_run_config(Json{{"q", "two"}}); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { parse_run_config(Json::array()); }) == ErrorCode::ConfigError);
  RunConfig c;
  CHECK(code_of([&] { validate(c); }) == ErrorCode::ConfigError);
  c.command = "verify";
  validate(c);
  c.format = "xml";
  CHECK(code_of([&] { validate(c); }) == ErrorCode::ConfigError);
  c.format = "json";
  c.family = "supercuspidal";
  CHECK(code_of([&] { validate(c); }) == ErrorCode::ConfigError);
  c.family = "depth-zero";
  c.jobs = 0;
  CHECK(code_of([&] { validate(c); }) == ErrorCode::ConfigError);
  c.jobs = 1;
  c.command = "reduce";
  CHECK(code_of([&] { validate(c); }) == ErrorCode::ConfigError);
}

TEST_CASE("types built from a config") {
  RunConfig c;
  c.command = "verify";
  c.q = 3;
  c.theta = 1;
  const TypeParams a = first_type(c), b = second_type(c);
  CHECK(a.theta_index == 1);
  CHECK(a.psi_sign == 1);
  CHECK(b.theta_index == 7);
  CHECK(b.psi_sign == -1);
  c.twist = "-1";
  CHECK(second_type(c).A == CycNumber(1));
  c.family = "ramified";
  c.sigma = 1;
  c.A = "zeta(3)";
  c.twist = "zeta(4)";
  const TypeParams r = second_type(c);
  CHECK(r.sigma == 1);
  CHECK(r.A.modulus() == 12);
  CHECK(r.A == parse_scalar("zeta(3)^-1 * zeta(4)"));
  c.theta2 = 5;
  CHECK(second_type(c).theta_index == 5);
}
