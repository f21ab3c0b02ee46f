#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tasklab/demos.hpp"

using namespace tasklab;

TEST_CASE("every demo finishes all-green and renders identically twice") {
  for (const std::string& name : demo_names()) {
    CAPTURE(name);
    Report first = run_demo(name);
    Report second = run_demo(name);
    CHECK(render_report(first) == render_report(second));
    REQUIRE(first.verdict.has_value());
    CHECK(*first.verdict == "ALL-GREEN");
    std::string text = render_report(first);
    // expectation lines render "expect.<label> = PASS|FAIL"; status values
    // like "FAILS" for a failed property check are legitimate content
    CHECK(text.find("= FAIL\n") == std::string::npos);
    CHECK(text.find("fp=") != std::string::npos);
  }
}

TEST_CASE("unknown demo names are rejected with the repertoire") {
  CHECK_THROWS_WITH_AS(run_demo("figtwo"), doctest::Contains("fig2"),
                       std::runtime_error);
}

TEST_CASE("a starved budget leaves partial statistics and no verdict") {
  Budget tiny;
  tiny.enumeration = 2;
  tiny.search_nodes = 2;
  Report r = run_demo("fig2", tiny);
  CHECK(!r.verdict.has_value());
  std::string text = render_report(r);
  CHECK(text.find("verdict") == std::string::npos);
  bool stopped = text.find("EXCEEDED") != std::string::npos ||
                 text.find("BUDGET_EXCEEDED") != std::string::npos;
  CHECK(stopped);
}
