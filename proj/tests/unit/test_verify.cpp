#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "algtool/verify.hpp"
#include "helpers.hpp"

using namespace algtool;
namespace fs = std::filesystem;

TEST_CASE("empty filter gives an empty report") {
  VerifyOptions o;
  Report r = verify_catalog(testing::corpus(), o);
  CHECK(r.lines.empty());
  CHECK(r.exit_code() == 0);
}

TEST_CASE("unknown sections are rejected") {
  VerifyOptions o;
  o.sections = {"nonsense"};
  CHECK_THROWS_AS(verify_catalog(testing::corpus(), o), Error);
}

TEST_CASE("reports are deterministic across worker counts") {
  VerifyOptions o;
  o.sections = {"identities", "degenerations", "isomorphisms"};
  o.jobs = 1;
  std::string a = verify_catalog(testing::corpus(), o).render();
  o.jobs = 4;
  std::string b = verify_catalog(testing::corpus(), o).render();
  CHECK(a == b);
}

TEST_CASE("sections run in the documented order") {
  VerifyOptions o;
  o.sections = {"isomorphisms", "z2"};
  Report r = verify_catalog(testing::corpus(), o);
  REQUIRE_FALSE(r.lines.empty());
  CHECK(r.lines.front().section == "z2");
  CHECK(r.lines.back().section == "isomorphisms");
}

TEST_CASE("a corrupted table is caught with a witness") {
  fs::path d = fs::temp_directory_path() / "algtool_test_flip";
  fs::remove_all(d);
  fs::create_directories(d);
  std::ofstream(d / "a.alg") << "algebra A27\n  provenance flipped c31^3\n  dim 3\n  e1*e1 = e2\n  e1*e3 = e3\n"
                                "  e3*e1 = e3\n  claim identity nc_jordan\n  claim identity flexible\nend\n";
  Catalog c = load_catalog(d);
  VerifyOptions o;
  o.sections = {"identities"};
  Report r = verify_catalog(c, o);
  REQUIRE(r.lines.size() == 2);
  CHECK(r.lines[0].outcome == Outcome::Fail);
  CHECK(r.lines[0].detail.find("jordan") != std::string::npos);
  CHECK(r.lines[1].outcome == Outcome::Pass);
  CHECK(r.exit_code() == 1);
  fs::remove_all(d);
}

TEST_CASE("records format") {
  Report r;
  r.header.push_back("seed 0");
  r.add(Outcome::Pass, "z2", "A01", "dim Z2 = 2 (claimed 2)");
  r.add(Outcome::Undecided, "fingerprints", "x/A~B", "identical");
  std::string t = r.render(ReportFormat::records);
  CHECK(t.find("status=PASS section=z2 item=\"A01\" detail=\"dim Z2 = 2 (claimed 2)\"") != std::string::npos);
  CHECK(t.find("summary pass=1 fail=0 undecided=1") != std::string::npos);
  CHECK(r.render().find("UNDECIDED fingerprints/x/A~B: identical") != std::string::npos);
}
