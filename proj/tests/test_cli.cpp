#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli/cache.hpp"
#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "cli/run_config.hpp"
#include "confalg/document.hpp"
#include "confalg/errors.hpp"

using namespace confalg;
using namespace confalg::cli;

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("confalg_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ::unsetenv("CONFALG_CACHE_DIR");
  }
  void TearDown() override {
    ::unsetenv("CONFALG_CACHE_DIR");
    fs::remove_all(dir_);
  }

  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

RunConfig builtin_config(BuiltinId id, int param, int max_card) {
  RunConfig cfg;
  cfg.input = BuiltinSpec{id, param};
  cfg.max_card = max_card;
  return cfg;
}

std::string read_all(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

constexpr const char* kNonAssociative = R"([space]
name = "nonassoc"
smooth = false
proper = false
connected = false
unital = false

[[basis]]
label = "a"
degree = 2
weight = 2

[[basis]]
label = "b"
degree = 2
weight = 2

[[basis]]
label = "c"
degree = 4
weight = 4

[[basis]]
label = "d"
degree = 6
weight = 6

[[product]]
left = "a"
right = "b"
terms = [{basis = "c", coeff = "1"}]

[[product]]
left = "b"
right = "a"
terms = [{basis = "c", coeff = "1"}]

[[product]]
left = "a"
right = "c"
terms = [{basis = "d", coeff = "1"}]

[[product]]
left = "c"
right = "a"
terms = [{basis = "d", coeff = "1"}]
)";

constexpr const char* kNonCommutative = R"([space]
name = "noncomm"
smooth = false
proper = false
connected = false
unital = false

[[basis]]
label = "a"
degree = 1
weight = 1

[[basis]]
label = "b"
degree = 1
weight = 1

[[basis]]
label = "p"
degree = 2
weight = 2

[[product]]
left = "a"
right = "b"
terms = [{basis = "p", coeff = "1"}]

[[product]]
left = "b"
right = "a"
terms = [{basis = "p", coeff = "1"}]
)";

}  // namespace

TEST_F(CliTest, ComputeAffineTable) {
  RunConfig cfg = builtin_config(BuiltinId::AffineSpace, 1, 4);
  ASSERT_EQ(cmd_compute(cfg, out_, err_), kOk);
  const std::string text = out_.str();
  EXPECT_NE(text.find("4\t8\t8\t1"), std::string::npos) << text;
  EXPECT_NE(text.find("4\t7\t6\t1"), std::string::npos) << text;
  EXPECT_NE(text.find("2\t3\t2\t1"), std::string::npos) << text;
}

TEST_F(CliTest, ComputeSingleCardinality) {
  RunConfig cfg = builtin_config(BuiltinId::AffineSpace, 1, 1);
  cfg.format = OutputFormat::Csv;
  ASSERT_EQ(cmd_compute(cfg, out_, err_), kOk);
  EXPECT_EQ(out_.str(), "normalization,k,degree,weight,dim\nconstant,1,2,2,1\n");
}

TEST_F(CliTest, ComputeRejectsNonAssociativeInput) {
  RunConfig cfg;
  cfg.input = write("bad.toml", kNonAssociative);
  cfg.max_card = 2;
  EXPECT_EQ(cmd_compute(cfg, out_, err_), kValidationFailed);
  EXPECT_NE(err_.str().find("Associativity"), std::string::npos) << err_.str();
}

TEST_F(CliTest, ComputeJsonRoundTrip) {
  RunConfig cfg = builtin_config(BuiltinId::SmoothProperCurve, 1, 3);
  cfg.format = OutputFormat::Json;
  cfg.normalization = Normalization::Both;
  ASSERT_EQ(cmd_compute(cfg, out_, err_), kOk);
  const Document doc = Document::parse(out_.str());
  EXPECT_EQ(doc["normalization"], "both");
  EXPECT_EQ(doc["associated_graded"], true);
  ASSERT_EQ(doc["cards"].size(), 3u);
  const ConfResult r = conf_cohomology(builtin(BuiltinId::SmoothProperCurve, 1), 3);
  for (const auto& card : doc["cards"]) {
    const int k = card["k"];
    std::size_t seen = 0;
    for (const auto& row : card["betti"]) {
      EXPECT_EQ(r.card(k).constant.at(row["degree"], row["weight"]), row["dim"].get<std::size_t>());
      ++seen;
    }
    EXPECT_EQ(seen, r.card(k).constant.entries().size());
    for (const auto& row : card["betti_dualizing"]) {
      EXPECT_EQ(r.card(k).dualizing->at(row["degree"], row["weight"]), row["dim"].get<std::size_t>());
    }
  }
  EXPECT_EQ(render_result(doc, OutputFormat::Json), out_.str());
}

TEST_F(CliTest, DualizingUnavailable) {
  RunConfig cfg;
  cfg.input = write("noncomm_fixed.toml", std::string(kNonAssociative).substr(0, std::string(kNonAssociative).find("[[product]]")));
  cfg.max_card = 2;
  cfg.normalization = Normalization::Dualizing;
  EXPECT_EQ(cmd_compute(cfg, out_, err_), kPreconditionFailed);
}

TEST_F(CliTest, Validate) {
  EXPECT_EQ(cmd_validate(write("curve.toml", serialize(builtin(BuiltinId::SmoothProperCurve, 2))), out_, err_), kOk);

  std::string dup = kNonCommutative;
  dup.replace(dup.find("label = \"b\""), 11, "label = \"a\"");
  EXPECT_EQ(cmd_validate(write("dup.toml", dup), out_, err_), kParseError);

  err_.str("");
  EXPECT_EQ(cmd_validate(write("comm.toml", kNonCommutative), out_, err_), kValidationFailed);
  EXPECT_NE(err_.str().find("GradedCommutativity"), std::string::npos) << err_.str();
  EXPECT_NE(err_.str().find("a"), std::string::npos);

  EXPECT_EQ(cmd_validate(dir_ / "missing.toml", out_, err_), kParseError);
}

TEST_F(CliTest, Stability) {
  EXPECT_EQ(cmd_stability(builtin_config(BuiltinId::AffineSpace, 2, 5), out_, err_), kOk);
  EXPECT_EQ(cmd_stability(builtin_config(BuiltinId::SmoothProperCurve, 2, 6), out_, err_), kOk);

  RunConfig singular;
  singular.input = write("singular.toml", std::string(kNonAssociative).substr(0, std::string(kNonAssociative).find("[[product]]")));
  singular.max_card = 3;
  EXPECT_EQ(cmd_stability(singular, out_, err_), kPreconditionFailed);

  RunConfig json = builtin_config(BuiltinId::AffineSpace, 1, 4);
  json.format = OutputFormat::Json;
  out_.str("");
  ASSERT_EQ(cmd_stability(json, out_, err_), kOk);
  const Document doc = Document::parse(out_.str());
  EXPECT_EQ(doc["mismatches"], 0);
  EXPECT_FALSE(doc["rows"].empty());
}

TEST_F(CliTest, GeneratorSpec) {
  const GradedSpace g = parse_generator_spec("1:2,0");
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].degree.coh_deg, 1);
  EXPECT_EQ(g[0].degree.tate_weight, 2);
  EXPECT_EQ(g[1].degree.tate_weight, 0);
  EXPECT_THROW(parse_generator_spec("x"), Error);
  EXPECT_THROW(parse_generator_spec(""), Error);
}

TEST_F(CliTest, CacheIsByteIdentical) {
  RunConfig cfg = builtin_config(BuiltinId::SmoothProperCurve, 2, 4);
  cfg.format = OutputFormat::Json;
  cfg.cache_dir = dir_ / "cache";
  ASSERT_EQ(cmd_compute(cfg, out_, err_), kOk);
  const std::string first = out_.str();
  ASSERT_EQ(std::distance(fs::directory_iterator(dir_ / "cache"), fs::directory_iterator()), 1);

  std::ostringstream second;
  ASSERT_EQ(cmd_compute(cfg, second, err_), kOk);
  EXPECT_EQ(second.str(), first);

  cfg.max_card = 3;
  std::ostringstream third;
  ASSERT_EQ(cmd_compute(cfg, third, err_), kOk);
  EXPECT_NE(third.str(), first);
  EXPECT_EQ(std::distance(fs::directory_iterator(dir_ / "cache"), fs::directory_iterator()), 2);
}

TEST_F(CliTest, CacheServesStoredDocument) {
  RunConfig cfg = builtin_config(BuiltinId::AffineSpace, 1, 2);
  cfg.cache_dir = dir_ / "cache";
  ASSERT_EQ(cmd_compute(cfg, out_, err_), kOk);
  // Tamper with the stored entry; a hit must return it verbatim.
  const fs::path entry = fs::directory_iterator(dir_ / "cache")->path();
  Document doc = Document::parse(read_all(entry));
  doc["space"]["name"] = "tampered";
  std::ofstream(entry) << doc.dump();
  std::ostringstream again;
  ASSERT_EQ(cmd_compute(cfg, again, err_), kOk);
  EXPECT_NE(again.str().find("tampered"), std::string::npos);
}

TEST_F(CliTest, CacheEnvironmentOverride) {
  const fs::path env_dir = dir_ / "env";
  ::setenv("CONFALG_CACHE_DIR", env_dir.c_str(), 1);
  RunConfig cfg = builtin_config(BuiltinId::AffineSpace, 2, 2);
  cfg.cache_dir = dir_ / "configured";
  ASSERT_EQ(cmd_compute(cfg, out_, err_), kOk);
  EXPECT_TRUE(fs::exists(env_dir));
  EXPECT_FALSE(fs::exists(dir_ / "configured") && !fs::is_empty(dir_ / "configured"));
  EXPECT_EQ(ResultCache::key_for("abc").size(), 64u);
  EXPECT_EQ(ResultCache::key_for("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
