// hamdec: construct, verify, audit and certify Hamilton decompositions of D_d(m).
// Exit codes: 0 pass, 1 verification or certificate failure, 2 usage or schema error.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamdec/certio.hpp"
#include "hamdec/d7boundary.hpp"
#include "hamdec/rootflat.hpp"
#include "hamdec/synthesis.hpp"
#include "hamdec/verify.hpp"

using namespace hamdec;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::InvalidParameters:
    case ErrorKind::UnsupportedParameters:
    case ErrorKind::MalformedInput:
    case ErrorKind::SchemaError:
      return kUsage;
    default:
      return kFail;
  }
}

struct Common {
  std::uint64_t budget = default_budget();
  unsigned jobs = default_jobs();
  std::string mode = "automatic";
  std::string report;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--budget", c.budget, "maximum orbit steps")->check(CLI::PositiveNumber);
  app->add_option("--jobs", c.jobs, "verification workers")->check(CLI::PositiveNumber);
  app->add_option("--mode", c.mode, "exhaustive | structural | automatic")
      ->check(CLI::IsMember({"exhaustive", "structural", "automatic", "auto"}));
  app->add_option("--report", c.report, "write a hamdec-report/1 file");
}

void print_recipe(const Recipe& r, int depth = 0) {
  std::printf("%*s%s d=%d m=%u", 2 * depth, "", r.kind.c_str(), r.params.d, r.params.m);
  if (r.detail.contains("a")) std::printf(" a=%d", r.detail["a"].get<int>());
  if (r.detail.contains("b")) std::printf(" b=%d", r.detail["b"].get<int>());
  std::printf("\n");
  for (const Recipe& c : r.children) print_recipe(c, depth + 1);
}

void print_report(const VerificationReport& rep) {
  for (const std::string& line : report_lines(rep)) std::printf("%s\n", line.c_str());
  for (const std::string& n : rep.notes) std::printf("note: %s\n", n.c_str());
  std::printf("d=%d, m=%u: %s (%s)\n", rep.params.d, rep.params.m,
              rep.passed ? "PASS" : (rep.resource_limited ? "RESOURCE-LIMITED" : "FAIL"), mode_name(rep.mode));
}

int finish(const VerificationReport& rep, const Common& c) {
  print_report(rep);
  if (!c.report.empty()) write_json_file(c.report, export_report(rep));
  return rep.passed ? kPass : kFail;
}

int cmd_construct(int d, Residue m, const std::string& out, bool explicit_table, const std::string& strategy,
                  const Common& c) {
  SynthesisOptions opt;
  opt.strategy = parse_strategy(strategy);
  opt.budget = c.budget;
  opt.jobs = c.jobs;
  const Decomposition dec = synthesize(d, m, opt);
  print_recipe(dec.recipe);
  const VerificationReport rep = verify(dec, parse_mode(c.mode), c.budget, c.jobs);
  if (!out.empty()) {
    const Json doc = export_decomposition(dec, explicit_table ? ExportKind::explicit_table : ExportKind::recipe, c.budget);
    write_json_file(out, doc, explicit_table ? -1 : 2);
    std::printf("wrote %s\n", out.c_str());
  }
  return finish(rep, c);
}

// Zero-set files: MC7 plus the root-flat suite for each stored modulus.
int verify_zero_set(const Json& doc, const Common& c) {
  bool ok = true;
  for (const auto& [m, zc] : import_zero_set(doc)) {
    const Mc7Report mc = mc7_check(zc);
    const RfReport rf = verify_rf(boundary_schedule(zc), RfMode::all, c.budget, c.jobs);
    const Index target = checked_pow(m, 6);
    for (int col = 0; col < 7; ++col) {
      const bool single = col < static_cast<int>(rf.return_cycles.size()) && rf.return_cycles[col].size() == 1 &&
                          rf.return_cycles[col][0] == target;
      std::printf("m=%u, color=%d: return single cycle = %s, length target=%llu\n", m, col, single ? "True" : "False",
                  static_cast<unsigned long long>(target));
    }
    std::printf("m=%u: latin = %s, exact cover = %s, RF = %s\n", m, mc.latin ? "True" : "False",
                mc.exact_cover ? "True" : "False", rf.passed() ? "True" : "False");
    ok = ok && mc.latin && mc.exact_cover && rf.passed();
  }
  std::printf("%s\n", ok ? "ALL REQUESTED ZERO-SET CHECKS PASSED" : "ZERO-SET CHECKS FAILED");
  return ok ? kPass : kFail;
}

bool rank_lines(Residue m, const RankCertificate& cert, const std::vector<std::vector<std::uint32_t>>& stored,
                const Schedule& s, const Common& c) {
  const RankReport rr = verify_rank(cert, s, c.budget);
  bool ok = rr.ok();
  for (int col = 0; col < 7; ++col) {
    bool match = true;
    if (!stored.empty()) match = stored[col] == return_map(s, col, c.budget);
    ok = ok && match;
    const RankColorCheck& cc = rr.colors.at(col);
    std::printf("m=%u, color=%d: rank permutation = %s, rank increment = %s, stored return map match = %s\n", m, col,
                cc.permutation ? "True" : "False", cc.increment ? "True" : "False", match ? "True" : "False");
  }
  if (ok) std::printf("m=%u: rank certificate verified\n", m);
  return ok;
}

int verify_rank_file(const Json& doc, const Common& c) {
  bool ok = true;
  for (const auto& [m, stored] : import_rank(doc)) {
    if (m != 3 && m != 5) fail(ErrorKind::UnsupportedParameters, "rank certificates exist for m in {3, 5}");
    ok = rank_lines(m, stored.cert, stored.return_maps, boundary_schedule(m), c) && ok;
  }
  std::printf("%s\n", ok ? "ALL REQUESTED RANK CHECKS PASSED" : "RANK CHECKS FAILED");
  return ok ? kPass : kFail;
}

int cmd_verify(const std::string& file, const Common& c) {
  const Json doc = read_json_file(file);
  const std::string family = check_format(doc);
  if (family == "hamdec-zeroset") return verify_zero_set(doc, c);
  if (family == "hamdec-rank") return verify_rank_file(doc, c);
  if (family == "hamdec-report") fail(ErrorKind::SchemaError, "reports are outputs; pass a decomposition or certificate");
  SynthesisOptions opt;
  opt.budget = c.budget;
  opt.jobs = c.jobs;
  const Decomposition dec = import_decomposition(doc, opt);
  print_recipe(dec.recipe);
  return finish(verify(dec, parse_mode(c.mode), c.budget, c.jobs), c);
}

int cmd_audit(int dmax, Residue mmax, const Common& c) {
  int failures = 0, limited = 0, points = 0;
  std::printf("%-4s %-6s %-20s %-11s %-17s %s\n", "d", "m", "recipe", "mode", "result", "cycle lengths");
  for (int d = 2; d <= dmax; ++d)
    for (Residue m = d == 2 ? 2 : 3; m <= mmax; m += (d == 2 ? 1 : 2)) {
      ++points;
      std::string kind = "-", mode = "-", result, lens;
      try {
        SynthesisOptions opt;
        opt.budget = c.budget;
        opt.jobs = c.jobs;
        const Decomposition dec = synthesize(d, m, opt);
        const VerificationReport rep = verify(dec, parse_mode(c.mode), c.budget, c.jobs);
        kind = dec.recipe.kind;
        mode = mode_name(rep.mode);
        if (!rep.cycle_lengths.empty()) {
          Index lo = rep.cycle_lengths[0], hi = lo;
          for (Index l : rep.cycle_lengths) lo = std::min(lo, l), hi = std::max(hi, l);
          lens = lo == hi ? std::to_string(d) + " x " + std::to_string(lo) : "min " + std::to_string(lo);
        }
        if (rep.passed) {
          result = "PASS";
        } else if (rep.resource_limited) {
          result = "RESOURCE-LIMITED";
          ++limited;
        } else {
          result = "FAIL";
          ++failures;
        }
        if (rep.mode == VerifyMode::structural && parse_mode(c.mode) == VerifyMode::automatic)
          lens += lens.empty() ? "(downgraded to structural: budget)" : " (downgraded)";
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ResourceLimit) {
          result = "RESOURCE-LIMITED";
          ++limited;
        } else {
          result = "FAIL";
          ++failures;
        }
        lens = e.what();
      }
      std::printf("%-4d %-6u %-20s %-11s %-17s %s\n", d, m, kind.c_str(), mode.c_str(), result.c_str(), lens.c_str());
      std::fflush(stdout);
    }
  std::printf("audit: %d points, %d failed, %d resource-limited\n", points, failures, limited);
  return failures ? kFail : kPass;
}

int cmd_certify_d7(const std::vector<Residue>& ms, const std::string& zeroset_in, const std::string& rank_out,
                   const std::string& zeroset_out, const Common& c) {
  for (Residue m : ms)
    if (m != 3 && m != 5) fail(ErrorKind::UnsupportedParameters, "boundary compilers exist for m in {3, 5} only");
  std::map<Residue, ZeroSetCompiler> supplied;
  if (!zeroset_in.empty()) {
    const Json doc = read_json_file(zeroset_in);
    if (check_format(doc) != "hamdec-zeroset") fail(ErrorKind::SchemaError, "--zeroset expects a hamdec-zeroset/1 file");
    supplied = import_zero_set(doc);
  }
  bool ok = true;
  std::vector<StoredRank> ranks;
  std::vector<ZeroSetCompiler> compilers;
  for (Residue m : ms) {
    ZeroSetCompiler zc;
    if (zeroset_in.empty()) {
      zc = embedded_compiler(m);
    } else {
      const auto it = supplied.find(m);
      if (it == supplied.end()) fail(ErrorKind::SchemaError, "certificates." + std::to_string(m) + " missing from --zeroset file");
      zc = it->second;
    }
    compilers.push_back(zc);
    const Schedule s = boundary_schedule(zc);
    const Mc7Report mc = mc7_check(zc);
    const RfReport rf = verify_rf(s, RfMode::all, c.budget, c.jobs);
    const Index target = checked_pow(m, 6);
    for (int col = 0; col < 7; ++col) {
      const bool single = rf.return_cycles.at(col).size() == 1 && rf.return_cycles[col][0] == target;
      std::printf("m=%u, color=%d: return single cycle = %s, length target=%llu\n", m, col, single ? "True" : "False",
                  static_cast<unsigned long long>(target));
    }
    std::printf("m=%u: row latin = %s, exact cover = %s, six-zero masks absent = %s\n", m, mc.latin ? "True" : "False",
                mc.exact_cover ? "True" : "False", mc.six_zero_masks_absent ? "True" : "False");
    ok = ok && mc.ok() && rf.passed();
    if (!rf.passed()) continue;
    StoredRank sr;
    sr.cert = generate_rank(s, c.budget);
    for (int col = 0; col < 7; ++col) sr.return_maps.push_back(return_map(s, col, c.budget));
    std::printf("m=%u: %llu rank values\n", m, static_cast<unsigned long long>(sr.cert.value_count()));
    ok = rank_lines(m, sr.cert, sr.return_maps, s, c) && ok;
    ranks.push_back(std::move(sr));
  }
  if (!rank_out.empty()) {
    write_json_file(rank_out, export_rank(ranks), -1);
    std::printf("wrote %s\n", rank_out.c_str());
  }
  if (!zeroset_out.empty()) {
    write_json_file(zeroset_out, export_zero_set(compilers));
    std::printf("wrote %s\n", zeroset_out.c_str());
  }
  std::printf("%s\n", ok ? "ALL REQUESTED ZERO-SET AND RANK CHECKS PASSED" : "ZERO-SET OR RANK CHECKS FAILED");
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton decompositions of the directed torus D_d(m)"};
  app.require_subcommand(1);

  Common common;
  int d = 0, dmax = 0;
  Residue m = 0, mmax = 0;
  std::string out, file, strategy = "standard", zeroset_in, rank_out, zeroset_out;
  bool explicit_table = false;
  std::vector<Residue> ms;

  CLI::App* construct = app.add_subcommand("construct", "synthesize, verify and export D_d(m)");
  construct->add_option("--d", d, "dimension")->required()->check(CLI::Range(2, 255));
  construct->add_option("--m", m, "modulus")->required()->check(CLI::Range(2u, UINT32_MAX));
  construct->add_option("--out", out, "write a hamdec/1 file");
  construct->add_flag("--explicit", explicit_table, "export the full direction table");
  construct->add_option("--strategy", strategy, "standard | dyadic-triadic")
      ->check(CLI::IsMember({"standard", "dyadic-triadic"}));
  add_common(construct, common);

  CLI::App* verify_cmd = app.add_subcommand("verify", "re-verify a decomposition or certificate file");
  verify_cmd->add_option("--file", file, "input file")->required();
  add_common(verify_cmd, common);

  CLI::App* audit = app.add_subcommand("audit", "synthesize and verify every (d, m) in range");
  audit->add_option("--dmax", dmax, "largest dimension")->required()->check(CLI::Range(2, 255));
  audit->add_option("--mmax", mmax, "largest modulus")->required()->check(CLI::Range(2u, UINT32_MAX));
  add_common(audit, common);

  CLI::App* certify = app.add_subcommand("certify", "finite certificates");
  certify->require_subcommand(1);
  CLI::App* d7 = certify->add_subcommand("d7", "zero-set and rank certificates for D_7(3), D_7(5)");
  d7->add_option("--m", ms, "modulus (3 or 5); repeatable")->required();
  d7->add_option("--zeroset", zeroset_in, "use compilers from a hamdec-zeroset/1 file");
  d7->add_option("--rank-out", rank_out, "write a hamdec-rank/1 file");
  d7->add_option("--zeroset-out", zeroset_out, "write a hamdec-zeroset/1 file");
  add_common(d7, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*construct) return cmd_construct(d, m, out, explicit_table, strategy, common);
    if (*verify_cmd) return cmd_verify(file, common);
    if (*audit) return cmd_audit(dmax, mmax, common);
    if (*d7) return cmd_certify_d7(ms, zeroset_in, rank_out, zeroset_out, common);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e.kind());
  }
  return kUsage;
}
