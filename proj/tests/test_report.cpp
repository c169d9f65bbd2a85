#include "doctest.h"
#include "qhl/report.hpp"

using namespace qhl;

TEST_CASE("parse_config") {
  const RunConfig cfg = parse_config("alpha=0.25\nmode=first\nfield=-1\n");
  CHECK(cfg.alpha == 0.25);
  CHECK(cfg.mode == "first");
  REQUIRE(cfg.fields.size() == 1);
  CHECK(cfg.fields[0] == -1);

  // defaults from empty input
  const RunConfig dflt = parse_config("");
  CHECK(dflt.mode == "first");
  CHECK(dflt.weight == "bump");
  CHECK(dflt.workers == 1);

  // comments and lists
  const RunConfig lst = parse_config("# comment\nfield=-1,-7\nX=250,500,1000\nworkers=4\n");
  CHECK(lst.fields.size() == 2);
  CHECK(lst.x_grid.size() == 3);
  CHECK(lst.workers == 4);

  // range violations name the constraint
  CHECK_THROWS_WITH_AS(parse_config("alpha=0.6\n"),
                       doctest::Contains("0 < |Re(alpha)| < 1/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("beta=-0.2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("r=0.7\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("nonsense=1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("field=-5\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("just a line\n"), std::invalid_argument);
}

TEST_CASE("report round trip") {
  MomentRequest req;
  req.field = FieldId(-7);
  req.X = 1234.5;
  req.mode = MomentMode::ratios;
  req.alpha = {0.25, 0.0};
  req.beta = {0.3, 0.0};
  req.workers = 8;
  MomentReport rep{req,
                   {1.234567890123456789, -0.5},
                   {1.1, 0.0},
                   {0.2, 0.01},
                   {-0.0654321, -0.51},
                   0.725,
                   321,
                   0,
                   1.0021};
  const std::string j = emit_report_json(rep);
  const MomentReport back = parse_report_json(j);
  CHECK(back.lhs == rep.lhs);
  CHECK(back.main1 == rep.main1);
  CHECK(back.main2 == rep.main2);
  CHECK(back.residual == rep.residual);
  CHECK(back.predicted_exponent == rep.predicted_exponent);
  CHECK(back.num_c == rep.num_c);
  CHECK(back.skipped_c == rep.skipped_c);
  CHECK(back.fitted_constant == rep.fitted_constant);
  CHECK(back.request.X == rep.request.X);
  CHECK(back.request.field == rep.request.field);
  CHECK(back.request.alpha == rep.request.alpha);
  CHECK(back.request.workers == rep.request.workers);

  // JSON carries the audit fields
  CHECK(j.find("skipped_c") != std::string::npos);
  CHECK(j.find("eps_l") != std::string::npos);

  // emission is deterministic
  CHECK(emit_report_json(rep) == j);

  // CSV: fixed header, 17-significant-digit row that re-parses exactly
  const std::string header = report_csv_header();
  CHECK(header.substr(0, 11) == "field,mode,");
  const std::string row = report_csv_row(rep);
  CHECK(row.find("1.2345678901234568") != std::string::npos);
  const std::size_t cols = std::count(header.begin(), header.end(), ',');
  CHECK(std::count(row.begin(), row.end(), ',') == (long)cols);
}
