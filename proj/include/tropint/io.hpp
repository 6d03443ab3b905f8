#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropint/tropical.hpp"

namespace tropint {

struct SystemFile {
  int vars = 0;
  std::vector<TropicalPolynomial> polynomials;
  std::optional<uint64_t> seed;
  std::optional<long> samples;
  std::optional<std::array<Rat, 4>> box;  // xmin, xmax, ymin, ymax
  std::string raw;                        // exact input bytes, for the digest
};

// Parses and validates a SystemFile. Parse failures throw errc::parse_error
// with a line/column position for syntax errors.
SystemFile load_system_file(const std::string& path);
SystemFile parse_system_file(const std::string& text);

// fnv1a-64 of the input bytes, hex
std::string input_digest(const std::string& raw);

nlohmann::json report_envelope(const std::string& command, const SystemFile& input,
                               nlohmann::json results);

// sorted keys, 2-space indent, trailing newline: byte-stable for golden files
std::string dump_report(const nlohmann::json& j);

// temp file + rename in the target directory
void write_atomic(const std::string& path, const std::string& content);

nlohmann::json j_int(const Int& v);
nlohmann::json j_rat(const Rat& v);
nlohmann::json j_ivec(const IVec& v);
nlohmann::json j_qvec(const QVec& v);

extern const char* kToolVersion;

}  // namespace tropint
