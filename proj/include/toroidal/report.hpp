#pragma once

#include <string>

#include <json.hpp>

#include "toroidal/toroidal_rep.hpp"

namespace toroidal {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char *kEngineVersion = "0.1.0";

/// "7/2" style rendering of a half-integer given twice its value.
std::string half_str(int twice);
/// Parses "3", "7/2" or "3.5" into twice the value; throws ConfigError unless
/// the value is a nonnegative half-integer.
int parse_half(const std::string &text);

nlohmann::json lattice_json(const LatticeContext &ctx);
nlohmann::json generators_json(const GeneratorTable &t);
nlohmann::json report_json(const LatticeContext &ctx, const RelationReport &r);

std::string lattice_text(const LatticeContext &ctx, const GeneratorTable &t);
std::string report_text(const LatticeContext &ctx, const RelationReport &r, bool all_entries);

} // namespace toroidal
