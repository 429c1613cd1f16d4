#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>
#include <stack>

#include "twobridge/errors.hpp"
#include "twobridge/report.hpp"
#include "twobridge/svg.hpp"

using namespace twobridge;

namespace {

AdmissiblePair P(Int p, Int q) { return AdmissiblePair::make(p, q); }

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

// Minimal well-formedness check: balanced start/end tags, no stray '<' or
// '&' in text, one root element.
bool well_formed(const std::string& xml) {
  std::stack<std::string> open;
  int roots = 0;
  std::size_t i = 0;
  while (i < xml.size()) {
    if (xml[i] != '<') {
      if (xml[i] == '&') return false;
      ++i;
      continue;
    }
    const auto close = xml.find('>', i);
    if (close == std::string::npos) return false;
    const std::string tag = xml.substr(i + 1, close - i - 1);
    i = close + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    if (tag[0] == '/') {
      if (open.empty() || open.top() != tag.substr(1)) return false;
      open.pop();
      continue;
    }
    const std::string name = tag.substr(0, tag.find_first_of(" \n/"));
    if (open.empty()) ++roots;
    if (tag.back() != '/') open.push(name);
  }
  return open.empty() && roots == 1;
}

}  // namespace

TEST_CASE("pair report for (4,3)") {
  const auto r = report_for(P(4, 3));
  CHECK(r.l == 2);
  CHECK(r.alpha == std::vector<Int>{2, 2});
  CHECK(r.b == std::vector<Int>{2, 1, 0});
  CHECK(r.sigma == 1);
  CHECK(r.components == 2);
  CHECK(r.decomposition == "T2 T1");
  CHECK(r.all_checks_pass());

  const auto line = to_json_line(r);
  CHECK(line.find("\"alpha\":[2,2]") != std::string::npos);
  CHECK(line.find("\"b\":[2,1,0]") != std::string::npos);
  CHECK(line.find("\"sigma\":1") != std::string::npos);
  CHECK(line.find("\"l\":2") != std::string::npos);
}

TEST_CASE("components match length parity") {
  for (Int p = 1; p <= 25; ++p) {
    for (Int q = 1; q < 2 * p; q += 2) {
      if (!is_admissible(p, q)) continue;
      const auto r = report_for(P(p, q));
      CHECK((r.components == 1) == (r.l % 2 == 1));
    }
  }
}

TEST_CASE("JSON round trip is byte-identical") {
  for (Int p = 1; p <= 20; ++p) {
    for (Int q = 1; q < 4 * p; q += 2) {
      if (!is_admissible(p, q)) continue;
      const auto r = report_for(P(p, q));
      const auto text = to_json_line(r);
      const auto back = pair_report_from_json(Json::parse(text));
      CHECK(back == r);
      CHECK(to_json_line(back) == text);
    }
  }
}

TEST_CASE("JSON with absent profile") {
  PairReport r;
  r.p = 9;
  r.q = 1;
  r.alpha = {1, 2, 1, 2};
  r.checks = {{"FOX", false}};
  const auto text = to_json_line(r);
  CHECK(text.find("\"i0\":null") != std::string::npos);
  CHECK(to_json_line(pair_report_from_json(Json::parse(text))) == text);
  CHECK(to_csv_row(r).find(",,,") != std::string::npos);
}

TEST_CASE("JSON decoding errors") {
  CHECK_THROWS_AS(pair_report_from_json(Json::array()), DomainError);
  auto j = to_json(report_for(P(3, 1)));
  j.erase("sigma");
  CHECK_THROWS_AS(pair_report_from_json(j), DomainError);
  j = to_json(report_for(P(3, 1)));
  j["alpha"] = "oops";
  CHECK_THROWS_AS(pair_report_from_json(j), DomainError);
}

TEST_CASE("CSV encoding") {
  CHECK(csv_header() ==
        "p,q,l,alpha,b,sigma,delta,i0,radius,components,all_checks_pass,decomposition");
  CHECK(to_csv_row(report_for(P(4, 3))) == "4,3,2,2;2,2;1;0,1,2;2,1,1,2,true,T2 T1");
  CHECK(to_csv_row(report_for(P(1, 1))) == "1,1,1,1,1;0,0,1,1,0,1,true,");
}

TEST_CASE("aggregate and summary") {
  RangeOptions opt;
  opt.max_p = 4;
  const auto rep = audit_range(opt);
  const auto agg = aggregate_json(rep);
  CHECK(agg["aggregate"]["total_pairs"] == 9);
  CHECK(agg["aggregate"]["resolved_t2_formula"] == "proof");
  CHECK(agg["aggregate"]["failures"].empty());
  const auto line = summary_line(rep, std::chrono::milliseconds(12));
  CHECK(line == "pairs=9 failures=0 time_ms=12 t2=proof complete=yes");
}

TEST_CASE("svg of (4,3)") {
  const auto doc = render_svg(P(4, 3));
  CHECK(well_formed(doc));
  CHECK(count(doc, "class=\"overarc\"") == 3);
  CHECK(count(doc, "class=\"crossing-sign\"") == 3);
  CHECK(count(doc, "data-sign=\"1\"") == 2);
  CHECK(count(doc, "data-sign=\"-1\"") == 1);
  CHECK(count(doc, "class=\"underarc\"") == 1);
}

TEST_CASE("svg of (1,1) and (5,3)") {
  const auto one = render_svg(P(1, 1));
  CHECK(well_formed(one));
  CHECK(count(one, "class=\"overarc\"") == 2);
  CHECK(count(one, "class=\"grid\"") == 2);
  CHECK(count(one, "class=\"crossing-sign\"") == 0);

  const auto five = render_svg(P(5, 3));
  CHECK(well_formed(five));
  CHECK(count(five, "data-sign=\"1\"") == 2);
  CHECK(count(five, "data-sign=\"-1\"") == 2);
}

TEST_CASE("svg output uses integer coordinates only") {
  const auto doc = render_svg(P(7, 9));
  CHECK(well_formed(doc));
  const auto body = doc.substr(doc.find("<title>"));
  CHECK_FALSE(std::regex_search(body, std::regex("[0-9]\\.[0-9]")));
}

TEST_CASE("svg render bound") {
  CHECK_NOTHROW(render_svg(P(101, 99)));
  CHECK_THROWS_AS(render_svg(P(101, 101 + 2)), DomainError);
}
