#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>

#include "hopfq/error.hpp"
#include "hopfq/loop.hpp"

using namespace hopfq;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

// Order-5 loop with identity 0 that is Latin but not IP.
const std::vector<std::vector<int>> kNonIp5 = {
    {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 3, 4, 0, 1}, {3, 4, 1, 2, 0}, {4, 2, 0, 1, 3}};

}  // namespace

TEST_CASE("parse the cyclic group of order two") {
  const LoopTable z2 = parse_loop("2\n0 1\n1 0\n");
  CHECK(z2.order() == 2);
  CHECK(z2.identity() == 0);
  CHECK(z2.inv(1) == 1);
  const LoopReport r = classify(z2);
  CHECK(r.ip.holds);
  CHECK(r.associative.holds);
  CHECK(r.commutative.holds);
}

TEST_CASE("parse comments and serialization round trip") {
  const LoopTable a = parse_loop("# two elements\n  2\n0   1\n# mid\n1 0");
  CHECK(serialize_loop(a) == "2\n0 1\n1 0\n");
  for (const std::string& name : standard_builtins()) {
    const LoopTable l = builtin_loop(name);
    CHECK(parse_loop(serialize_loop(l)).table() == l.table());
  }
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_loop("2\n0 0\n1 0"); }) == ErrorCode::LatinSquareViolation);
  try {
    parse_loop("2\n0 0\n1 0");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("row 0") != std::string::npos);
  }
  CHECK(code_of([] { parse_loop("2\n0 1\n0 1"); }) == ErrorCode::LatinSquareViolation);
  CHECK(code_of([] { parse_loop("2\n0 1\n1"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_loop("2\n0 1\n1 2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_loop("x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_loop("3\n1 0 2\n0 2 1\n2 1 0"); }) == ErrorCode::NoIdentity);
  CHECK(code_of([] { builtin_loop("nosuchloop"); }) == ErrorCode::UnknownBuiltin);
  CHECK(code_of([] { builtin_loop("cyclic(0)"); }) == ErrorCode::BadParams);
}

TEST_CASE("classify the symmetric group") {
  const LoopTable s3 = builtin_loop("sym3");
  CHECK(s3.order() == 6);
  const LoopReport r = classify(s3);
  CHECK(r.ip.holds);
  CHECK(r.flexible.holds);
  CHECK(r.moufang.holds);
  CHECK(r.associative.holds);
  CHECK_FALSE(r.commutative.holds);
  CHECK(r.commutative.witness == std::vector<int>{1, 2});
}

TEST_CASE("classify the octonion unit loop") {
  const LoopTable o = builtin_loop("octonion");
  CHECK(o.order() == 16);
  const LoopReport r = classify(o);
  CHECK(r.ip.holds);
  CHECK(r.flexible.holds);
  CHECK(r.moufang.holds);
  CHECK_FALSE(r.commutative.holds);
  CHECK_FALSE(r.associative.holds);
  CHECK(r.associative.witness == std::vector<int>{2, 4, 8});
  CHECK(r.commutative.witness == std::vector<int>{2, 4});
  CHECK(o.inv(2) == 3);
}

TEST_CASE("chein double of the symmetric group") {
  const LoopTable c = builtin_loop("chein:sym3");
  CHECK(c.order() == 12);
  const LoopReport r = classify(c);
  CHECK(r.ip.holds);
  CHECK(r.moufang.holds);
  CHECK(r.flexible.holds);
  CHECK_FALSE(r.associative.holds);
  CHECK(r.associative.witness == std::vector<int>{1, 2, 6});
  CHECK(builtin_loop("chein(sym3)") == c);
}

TEST_CASE("products and cyclic groups") {
  const LoopTable p = builtin_loop("product(cyclic(2),cyclic(3))");
  CHECK(p.order() == 6);
  const LoopReport r = classify(p);
  CHECK(r.associative.holds);
  CHECK(r.commutative.holds);
  CHECK(builtin_loop("cyclic:4") == builtin_loop("cyclic(4)"));
  CHECK(builtin_loop("cyclic:1").order() == 1);
}

TEST_CASE("a loop without the inverse property") {
  const LoopTable l(kNonIp5);
  const LoopReport r = classify(l);
  CHECK_FALSE(r.ip.holds);
  CHECK(r.ip.witness == std::vector<int>{1, 2});
}

TEST_CASE("property implications on the standard builtins") {
  for (const std::string& name : standard_builtins()) {
    CAPTURE(name);
    const LoopReport r = classify(builtin_loop(name));
    if (r.associative.holds) CHECK(r.moufang.holds);
    if (r.moufang.holds) CHECK(r.flexible.holds);
    if (r.commutative.holds) CHECK(r.flexible.holds);
    CHECK(r.ip.holds);
  }
}

TEST_CASE("extra tables from the builtin directory") {
  const auto dir = std::filesystem::temp_directory_path() / "hopfq_builtin_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "klein.tbl");
    out << "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n";
  }
  ::setenv("HOPFQ_BUILTIN_DIR", dir.c_str(), 1);
  const LoopTable k = builtin_loop("klein");
  ::unsetenv("HOPFQ_BUILTIN_DIR");
  CHECK(k.order() == 4);
  CHECK(classify(k).associative.holds);
  std::filesystem::remove_all(dir);
}
