#include "hamdec/certio.hpp"

#include <fstream>
#include <sstream>

namespace hamdec {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  fail(ErrorKind::SchemaError, (path.empty() ? std::string("<root>") : path) + ": " + what);
}

const Json& req(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(path, "missing field '" + key + "'");
  return *it;
}

std::int64_t req_int(const Json& j, const std::string& key, const std::string& path, std::int64_t lo, std::int64_t hi) {
  const Json& v = req(j, key, path);
  const std::string at = path.empty() ? key : path + "." + key;
  if (!v.is_number_integer()) schema(at, "expected an integer");
  const std::int64_t x = v.get<std::int64_t>();
  if (x < lo || x > hi) schema(at, "value " + std::to_string(x) + " out of range");
  return x;
}

const Json& req_array(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = req(j, key, path);
  if (!v.is_array()) schema(path.empty() ? key : path + "." + key, "expected an array");
  return v;
}

std::int64_t as_int(const Json& v, const std::string& path, std::int64_t lo, std::int64_t hi) {
  if (!v.is_number_integer()) schema(path, "expected an integer");
  const std::int64_t x = v.get<std::int64_t>();
  if (x < lo || x > hi) schema(path, "value " + std::to_string(x) + " out of range");
  return x;
}

Json header(const char* format, int d, Residue m) {
  Json j;
  j["format"] = format;
  j["d"] = d;
  if (m) j["m"] = m;
  return j;
}

}  // namespace

std::string check_format(const Json& doc) {
  const Json& f = req(doc, "format", "");
  if (!f.is_string()) schema("format", "expected a string");
  const std::string tag = f.get<std::string>();
  const auto slash = tag.rfind('/');
  if (slash == std::string::npos) schema("format", "tag '" + tag + "' has no version");
  const std::string family = tag.substr(0, slash), version = tag.substr(slash + 1);
  if (family != "hamdec" && family != "hamdec-zeroset" && family != "hamdec-rank" && family != "hamdec-report")
    schema("format", "unknown format '" + family + "'");
  if (version != "1") schema("format", "unsupported version '" + version + "' of " + family + " (expected 1)");
  return family;
}

Json recipe_to_json(const Recipe& r) {
  Json j;
  j["kind"] = r.kind;
  j["d"] = r.params.d;
  j["m"] = r.params.m;
  j["detail"] = r.detail;
  j["children"] = Json::array();
  for (const Recipe& c : r.children) j["children"].push_back(recipe_to_json(c));
  return j;
}

namespace {

Recipe recipe_from_json_at(const Json& j, const std::string& path) {
  Recipe r;
  const Json& kind = req(j, "kind", path);
  if (!kind.is_string()) schema(path + ".kind", "expected a string");
  r.kind = kind.get<std::string>();
  r.params.d = static_cast<int>(req_int(j, "d", path, 2, 255));
  r.params.m = static_cast<Residue>(req_int(j, "m", path, 2, UINT32_MAX));
  if (j.contains("detail")) {
    if (!j["detail"].is_object()) schema(path + ".detail", "expected an object");
    r.detail = j["detail"];
  }
  if (j.contains("children")) {
    if (!j["children"].is_array()) schema(path + ".children", "expected an array");
    for (std::size_t i = 0; i < j["children"].size(); ++i)
      r.children.push_back(recipe_from_json_at(j["children"][i], path + ".children[" + std::to_string(i) + "]"));
  }
  return r;
}

}  // namespace

Recipe recipe_from_json(const Json& j) { return recipe_from_json_at(j, "recipe"); }

RecipePlan plan_from_recipe(const Recipe& r) {
  RecipePlan p;
  p.kind = r.kind;
  p.params = r.params;
  static const char* leaves[] = {"d2-phase", "d3-table", "d5-schedule", "d7-boundary", "count-matrix"};
  for (const char* leaf : leaves)
    if (r.kind == leaf) return p;
  if (r.kind == "composite-lift") {
    p.a = static_cast<int>(req_int(r.detail, "a", "recipe.detail", 2, 255));
    p.b = static_cast<int>(req_int(r.detail, "b", "recipe.detail", 2, 255));
  } else if (r.kind == "successor-lift" || r.kind == "dyadic-triadic-lift") {
    p.b = static_cast<int>(req_int(r.detail, "b", "recipe.detail", 2, 255));
  } else {
    schema("recipe.kind", "'" + r.kind + "' cannot be rebuilt from a recipe");
  }
  for (const Recipe& c : r.children) p.children.push_back(plan_from_recipe(c));
  return p;
}

Json export_decomposition(const Decomposition& dec, ExportKind kind, std::uint64_t budget) {
  Json j = header(kFormatDecomposition, dec.params.d, dec.params.m);
  j["kind"] = kind == ExportKind::recipe ? "recipe" : "explicit";
  j["recipe"] = recipe_to_json(dec.recipe);
  if (kind == ExportKind::explicit_table) {
    const Index n = vertex_count(dec.params);
    const int d = dec.params.d;
    if (sat_mul(n, d) > budget) fail(ErrorKind::ResourceLimit, "explicit table exceeds budget");
    // direction_table is vertex-major; the file is colour-major.
    const std::vector<Direction> t = direction_table(dec, budget);
    Json arr = Json::array();
    arr.get_ref<Json::array_t&>().reserve(t.size());
    for (int c = 0; c < d; ++c)
      for (Index v = 0; v < n; ++v) arr.push_back(t[v * d + c]);
    j["directions"] = std::move(arr);
  }
  return j;
}

Decomposition import_decomposition(const Json& doc, const SynthesisOptions& opt) {
  if (check_format(doc) != "hamdec") schema("format", "expected hamdec/1");
  const int d = static_cast<int>(req_int(doc, "d", "", 2, 255));
  const Residue m = static_cast<Residue>(req_int(doc, "m", "", 2, UINT32_MAX));
  const Json& kind = req(doc, "kind", "");
  if (!kind.is_string()) schema("kind", "expected a string");
  if (kind == "explicit") {
    const Json& arr = req_array(doc, "directions", "");
    const Params p{d, m};
    const Index n = vertex_count(p);
    if (arr.size() != sat_mul(n, d))
      schema("directions", "has " + std::to_string(arr.size()) + " entries, expected " + std::to_string(sat_mul(n, d)));
    std::vector<Direction> table(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
      table[i] = static_cast<Direction>(as_int(arr[i], "directions[" + std::to_string(i) + "]", 0, d - 1));
    Decomposition dec = explicit_decomposition(p, std::move(table));
    if (doc.contains("recipe")) dec.recipe.detail["source"] = doc["recipe"].value("kind", "");
    return dec;
  }
  if (kind != "recipe") schema("kind", "expected 'recipe' or 'explicit'");
  const Recipe stored = recipe_from_json(req(doc, "recipe", ""));
  if (stored.params != Params{d, m}) schema("recipe", "parameters disagree with the header");
  Decomposition dec = execute(plan_from_recipe(stored), opt);
  if (recipe_to_json(dec.recipe) != recipe_to_json(stored))
    fail(ErrorKind::MalformedCertificate, "rebuilt recipe differs from the stored recipe");
  return dec;
}

Json export_zero_set(const std::vector<ZeroSetCompiler>& compilers) {
  Json j = header(kFormatZeroSet, 7, 0);
  Json certs = Json::object();
  for (const ZeroSetCompiler& zc : compilers) {
    Json c;
    c["m"] = zc.m;
    Json off = Json::array();
    for (Residue t = 0; t < zc.m; ++t)
      if (t != 1) off.push_back(zc.alpha[t]);
    c["constant_offsets"] = off;
    Json sel = Json::array();
    for (int mask = 0; mask < 128; ++mask)
      if (zc.theta[mask] >= 0) sel.push_back(Json::array({mask, zc.theta[mask]}));
    c["selector"] = sel;
    certs[std::to_string(zc.m)] = c;
  }
  j["certificates"] = certs;
  return j;
}

std::map<Residue, ZeroSetCompiler> import_zero_set(const Json& doc) {
  if (check_format(doc) != "hamdec-zeroset") schema("format", "expected hamdec-zeroset/1");
  const Json& certs = req(doc, "certificates", "");
  if (!certs.is_object() || certs.empty()) schema("certificates", "expected a non-empty object keyed by m");
  std::map<Residue, ZeroSetCompiler> out;
  for (auto it = certs.begin(); it != certs.end(); ++it) {
    const std::string path = "certificates." + it.key();
    const Json& c = it.value();
    ZeroSetCompiler zc;
    zc.m = static_cast<Residue>(req_int(c, "m", path, 3, 1'000'000));
    if (it.key() != std::to_string(zc.m)) schema(path + ".m", "does not match its key");
    const Json& off = req_array(c, "constant_offsets", path);
    // Either the m - 1 offsets for t != 1, or m entries with t = 1 ignored.
    if (off.size() != zc.m - 1 && off.size() != zc.m)
      schema(path + ".constant_offsets", "expected " + std::to_string(zc.m - 1) + " entries");
    zc.alpha.assign(zc.m, 0);
    std::size_t k = 0;
    for (Residue t = 0; t < zc.m; ++t) {
      if (t == 1 && off.size() == zc.m - 1) continue;
      const int v = static_cast<int>(as_int(off[k], path + ".constant_offsets[" + std::to_string(k) + "]", 0, 6));
      ++k;
      if (t != 1) zc.alpha[t] = v;
    }
    zc.theta.assign(128, -1);
    const Json& sel = req_array(c, "selector", path);
    for (std::size_t i = 0; i < sel.size(); ++i) {
      const std::string at = path + ".selector[" + std::to_string(i) + "]";
      if (!sel[i].is_array() || sel[i].size() != 2) schema(at, "expected a [Z, p] pair");
      int mask = 0;
      if (sel[i][0].is_array()) {
        for (std::size_t q = 0; q < sel[i][0].size(); ++q)
          mask |= 1 << as_int(sel[i][0][q], at + "[0][" + std::to_string(q) + "]", 0, 6);
      } else {
        mask = static_cast<int>(as_int(sel[i][0], at + "[0]", 0, 127));
      }
      const int p = static_cast<int>(as_int(sel[i][1], at + "[1]", 0, 6));
      if (zc.theta[mask] >= 0 && zc.theta[mask] != p) schema(at, "conflicting entry for mask " + std::to_string(mask));
      zc.theta[mask] = static_cast<std::int8_t>(p);
    }
    out[zc.m] = std::move(zc);
  }
  return out;
}

Json export_rank(const std::vector<StoredRank>& certs) {
  Json j = header(kFormatRank, 7, 0);
  j["state_order"] = "root-state index: w_0..w_5 little-endian mixed radix, w_6 = -sum";
  Json all = Json::object();
  for (const StoredRank& s : certs) {
    Json c;
    c["m"] = s.cert.m;
    c["ranks"] = s.cert.ranks;
    if (!s.return_maps.empty()) c["return_maps"] = s.return_maps;
    all[std::to_string(s.cert.m)] = c;
  }
  j["certificates"] = all;
  return j;
}

std::map<Residue, StoredRank> import_rank(const Json& doc) {
  if (check_format(doc) != "hamdec-rank") schema("format", "expected hamdec-rank/1");
  const Json& certs = req(doc, "certificates", "");
  if (!certs.is_object() || certs.empty()) schema("certificates", "expected a non-empty object keyed by m");
  std::map<Residue, StoredRank> out;
  for (auto it = certs.begin(); it != certs.end(); ++it) {
    const std::string path = "certificates." + it.key();
    StoredRank s;
    s.cert.m = static_cast<Residue>(req_int(it.value(), "m", path, 3, 1'000'000));
    if (it.key() != std::to_string(s.cert.m)) schema(path + ".m", "does not match its key");
    const Index n = checked_pow(s.cert.m, 6);
    auto read_lists = [&](const std::string& key, std::vector<std::vector<std::uint32_t>>& dst) {
      const Json& arr = req_array(it.value(), key, path);
      if (arr.size() != 7) schema(path + "." + key, "expected 7 colour lists");
      for (std::size_t c = 0; c < 7; ++c) {
        const std::string at = path + "." + key + "[" + std::to_string(c) + "]";
        if (!arr[c].is_array() || arr[c].size() != n) schema(at, "expected " + std::to_string(n) + " values");
        std::vector<std::uint32_t> v(n);
        for (Index i = 0; i < n; ++i) v[i] = static_cast<std::uint32_t>(as_int(arr[c][i], at, 0, static_cast<std::int64_t>(n) - 1));
        dst.push_back(std::move(v));
      }
    };
    read_lists("ranks", s.cert.ranks);
    if (it.value().contains("return_maps")) read_lists("return_maps", s.return_maps);
    out[s.cert.m] = std::move(s);
  }
  return out;
}

namespace {

const char* py_bool(bool b) { return b ? "True" : "False"; }

}  // namespace

std::vector<std::string> report_lines(const VerificationReport& rep) {
  std::vector<std::string> lines;
  const Residue m = rep.params.m;
  const int d = rep.params.d;
  if (rep.mode == VerifyMode::exhaustive && !rep.cycle_lengths.empty()) {
    const Index full = checked_pow(m, d), target = full / m;
    for (int c = 0; c < d; ++c) {
      const Index len = rep.cycle_lengths[c];
      std::ostringstream os;
      os << "m=" << m << ", color=" << c << ": return single cycle = " << py_bool(len == full)
         << ", length target=" << target;
      lines.push_back(os.str());
      std::ostringstream ot;
      ot << "m=" << m << ", color=" << c << ": torus cycle length = " << len << ", length target=" << full;
      lines.push_back(ot.str());
    }
  }
  for (const CheckResult& c : rep.checks) lines.push_back(c.name + " = " + py_bool(c.ok) + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  return lines;
}

namespace {

Json report_body(const VerificationReport& rep, bool with_timing) {
  Json j;
  j["d"] = rep.params.d;
  j["m"] = rep.params.m;
  j["mode"] = mode_name(rep.mode);
  j["recipe_kind"] = rep.recipe_kind;
  j["passed"] = rep.passed;
  j["resource_limited"] = rep.resource_limited;
  j["arc_partition"] = rep.arc_partition;
  j["cycle_lengths"] = rep.cycle_lengths;
  Json checks = Json::array();
  for (const CheckResult& c : rep.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  j["checks"] = checks;
  j["lines"] = report_lines(rep);
  j["notes"] = rep.notes;
  Json kids = Json::array();
  for (const auto& ch : rep.children) kids.push_back(report_body(ch, with_timing));
  j["children"] = kids;
  if (with_timing) {
    Json t = Json::object();
    for (const CheckResult& c : rep.checks) t[c.name] = c.seconds;
    j["timing"] = t;
  }
  return j;
}

}  // namespace

Json export_report(const VerificationReport& rep, bool with_timing) {
  Json j;
  j["format"] = kFormatReport;
  const Json body = report_body(rep, with_timing);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

Json canonical(const Json& doc) {
  if (doc.is_object()) {
    Json out = Json::object();
    for (auto it = doc.begin(); it != doc.end(); ++it)
      if (it.key() != "timing") out[it.key()] = canonical(it.value());
    return out;
  }
  if (doc.is_array()) {
    Json out = Json::array();
    for (const auto& v : doc) out.push_back(canonical(v));
    return out;
  }
  return doc;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::SchemaError, path + ": not valid JSON (" + e.what() + ")");
  }
}

void write_json_file(const std::string& path, const Json& doc, int indent) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  out << doc.dump(indent) << '\n';
  if (!out) fail(ErrorKind::InvalidInput, "write to '" + path + "' failed");
}

}  // namespace hamdec
