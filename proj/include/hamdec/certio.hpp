#pragma once

#include <map>
#include <string>
#include <vector>

#include "hamdec/d7boundary.hpp"
#include "hamdec/synthesis.hpp"
#include "hamdec/verify.hpp"
#include "json.hpp"

namespace hamdec {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatDecomposition = "hamdec/1";
inline constexpr const char* kFormatZeroSet = "hamdec-zeroset/1";
inline constexpr const char* kFormatRank = "hamdec-rank/1";
inline constexpr const char* kFormatReport = "hamdec-report/1";

// Family of a format tag ("hamdec", "hamdec-zeroset", ...); schema-error on an unknown
// family or a version other than 1.
std::string check_format(const Json& doc);

enum class ExportKind { recipe, explicit_table };

Json recipe_to_json(const Recipe& r);
Recipe recipe_from_json(const Json& j);
RecipePlan plan_from_recipe(const Recipe& r);

// Explicit layout: directions[color * m^d + vertex index].
Json export_decomposition(const Decomposition& dec, ExportKind kind, std::uint64_t budget = default_budget());
// Recipes are re-executed and must reproduce the stored tree exactly.
Decomposition import_decomposition(const Json& doc, const SynthesisOptions& opt = {});

// key certificates.$m with fields m, constant_offsets (t != 1) and selector [[mask, p], ...].
Json export_zero_set(const std::vector<ZeroSetCompiler>& compilers);
std::map<Residue, ZeroSetCompiler> import_zero_set(const Json& doc);

struct StoredRank {
  RankCertificate cert;
  std::vector<std::vector<std::uint32_t>> return_maps;  // may be empty
};
Json export_rank(const std::vector<StoredRank>& certs);
std::map<Residue, StoredRank> import_rank(const Json& doc);

// One line per colour in the style "m=3, color=0: return single cycle = True, length target=729".
std::vector<std::string> report_lines(const VerificationReport& rep);
// Canonical body plus a "timing" side section unless omitted.
Json export_report(const VerificationReport& rep, bool with_timing = true);
// Drops the timing side section recursively.
Json canonical(const Json& doc);

Json read_json_file(const std::string& path);
// indent < 0 writes compact JSON; a trailing newline is always added.
void write_json_file(const std::string& path, const Json& doc, int indent = 2);

}  // namespace hamdec
