#include "doctest.h"
#include "hamdec/certio.hpp"
#include "hamdec/smalldims.hpp"
#include "oracles.hpp"

using namespace hamdec;

namespace {

template <class F>
ErrorKind kind_thrown(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no hamdec::Error thrown");
  return ErrorKind::InternalError;
}

}  // namespace

TEST_CASE("format tags") {
  CHECK(check_format(Json{{"format", "hamdec/1"}}) == "hamdec");
  CHECK(check_format(Json{{"format", "hamdec-rank/1"}}) == "hamdec-rank");
  CHECK(kind_thrown([] { check_format(Json{{"format", "hamdec/2"}}); }) == ErrorKind::SchemaError);
  CHECK(kind_thrown([] { check_format(Json{{"format", "other/1"}}); }) == ErrorKind::SchemaError);
  CHECK(kind_thrown([] { check_format(Json{{"d", 3}}); }) == ErrorKind::SchemaError);
}

TEST_CASE("recipe files round trip") {
  for (const auto& [d, m] : {std::pair{11, 3u}, {4, 3u}, {7, 5u}}) {
    const Decomposition dec = synthesize(d, m);
    const Json doc = export_decomposition(dec, ExportKind::recipe);
    CHECK(doc["kind"] == "recipe");
    CHECK_FALSE(doc.contains("directions"));
    const Decomposition back = import_decomposition(Json::parse(doc.dump()));
    CHECK(recipe_to_json(back.recipe) == recipe_to_json(dec.recipe));
    CHECK(direction_table(back) == direction_table(dec));
  }
  const Json r113 = export_decomposition(synthesize(11, 3), ExportKind::recipe);
  CHECK(r113["recipe"]["kind"] == "successor-lift");
  CHECK(r113["recipe"]["detail"]["b"] == 5);
  CHECK(r113["recipe"]["children"][0]["kind"] == "d5-schedule");
}

TEST_CASE("a recipe that does not rebuild is refused") {
  Json doc = export_decomposition(synthesize(11, 3), ExportKind::recipe);
  doc["recipe"]["detail"]["swaps"] = 12345;
  CHECK(kind_thrown([&] { import_decomposition(doc); }) == ErrorKind::MalformedCertificate);
  Json wrong = export_decomposition(synthesize(4, 3), ExportKind::recipe);
  wrong["m"] = 5;
  CHECK(kind_thrown([&] { import_decomposition(wrong); }) == ErrorKind::SchemaError);
  Json unknown = export_decomposition(synthesize(4, 3), ExportKind::recipe);
  unknown["recipe"]["kind"] = "mystery";
  CHECK(kind_thrown([&] { import_decomposition(unknown); }) == ErrorKind::SchemaError);
}

TEST_CASE("explicit files round trip and detect tampering") {
  const Json d23 = export_decomposition(construct_d2(3), ExportKind::explicit_table);
  CHECK(d23["directions"].size() == 18);
  const Decomposition dec = synthesize(5, 3);
  Json doc = export_decomposition(dec, ExportKind::explicit_table);
  const Decomposition back = import_decomposition(doc);
  CHECK(direction_table(back) == direction_table(dec));
  CHECK(verify(back, VerifyMode::exhaustive).passed);
  // Colour 0 at vertex 7 takes colour 1's direction there.
  const Index n = oracle::ipow(3, 5);
  doc["directions"][7] = doc["directions"][n + 7];
  const VerificationReport bad = verify(import_decomposition(doc), VerifyMode::exhaustive);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.arc_partition);
  doc["directions"][3] = 9;
  CHECK(kind_thrown([&] { import_decomposition(doc); }) == ErrorKind::SchemaError);
  doc["directions"].erase(doc["directions"].begin());
  CHECK(kind_thrown([&] { import_decomposition(doc); }) == ErrorKind::SchemaError);
}

TEST_CASE("zero-set files") {
  const std::vector<ZeroSetCompiler> zs{embedded_compiler(3), embedded_compiler(5)};
  const Json doc = export_zero_set(zs);
  CHECK(check_format(doc) == "hamdec-zeroset");
  CHECK(doc["certificates"]["3"]["constant_offsets"].size() == 2);
  const auto back = import_zero_set(Json::parse(doc.dump()));
  REQUIRE(back.size() == 2);
  for (const ZeroSetCompiler& z : zs) {
    CHECK(back.at(z.m).theta == z.theta);
    for (Residue t = 0; t < z.m; ++t)
      if (t != 1) CHECK(back.at(z.m).alpha[t] == z.alpha[t]);
    CHECK(mc7_check(back.at(z.m)).ok());
  }
  Json missing = doc;
  missing["certificates"]["3"].erase("selector");
  CHECK(kind_thrown([&] { import_zero_set(missing); }) == ErrorKind::SchemaError);
  Json conflict = doc;
  auto& sel = conflict["certificates"]["3"]["selector"];
  sel.push_back(Json::array({sel[0][0], (sel[0][1].get<int>() + 1) % 7}));
  CHECK(kind_thrown([&] { import_zero_set(conflict); }) == ErrorKind::SchemaError);
  Json key = doc;
  key["certificates"]["3"]["m"] = 5;
  CHECK(kind_thrown([&] { import_zero_set(key); }) == ErrorKind::SchemaError);
}

TEST_CASE("rank files") {
  const Schedule s = boundary_schedule(3);
  StoredRank sr{generate_rank(s), {}};
  for (int c = 0; c < 7; ++c) sr.return_maps.push_back(return_map(s, c));
  const Json doc = export_rank({sr});
  const auto back = import_rank(Json::parse(doc.dump()));
  REQUIRE(back.count(3));
  CHECK(back.at(3).cert.ranks == sr.cert.ranks);
  CHECK(back.at(3).return_maps == sr.return_maps);
  CHECK(verify_rank(back.at(3).cert, s).ok());
  Json bad = doc;
  bad["certificates"]["3"]["ranks"].erase(bad["certificates"]["3"]["ranks"].begin());
  CHECK(kind_thrown([&] { import_rank(bad); }) == ErrorKind::SchemaError);
}

TEST_CASE("reports") {
  const VerificationReport rep = verify(synthesize(7, 3), VerifyMode::exhaustive);
  const auto lines = report_lines(rep);
  CHECK(std::find(lines.begin(), lines.end(), "m=3, color=0: return single cycle = True, length target=729") !=
        lines.end());
  CHECK(std::find(lines.begin(), lines.end(), "m=3, color=6: torus cycle length = 2187, length target=2187") !=
        lines.end());
  const Json a = export_report(rep), b = export_report(verify(synthesize(7, 3), VerifyMode::exhaustive));
  CHECK(a.contains("timing"));
  CHECK(check_format(a) == "hamdec-report");
  CHECK(canonical(a).dump() == canonical(b).dump());
  CHECK_FALSE(canonical(a).contains("timing"));
  CHECK(export_report(rep, false).dump() == canonical(a).dump());
  const Json st = export_report(verify(synthesize(4, 3), VerifyMode::structural));
  CHECK(st["children"].size() == 2);
  CHECK_FALSE(canonical(st)["children"][0].contains("timing"));
}

TEST_CASE("file helpers") {
  const std::string path = "hamdec_certio_test.json";
  const Json doc = export_decomposition(construct_d2(3), ExportKind::explicit_table);
  write_json_file(path, doc, -1);
  CHECK(read_json_file(path) == doc);
  write_json_file(path, doc);
  CHECK(read_json_file(path) == doc);
  std::remove(path.c_str());
  CHECK(kind_thrown([] { read_json_file("no/such/file.json"); }) != ErrorKind::InternalError);
}
