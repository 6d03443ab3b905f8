#include "tropint/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tropint {

const char* kToolVersion = "tropint 0.1.0";

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail_at(const std::string& text, size_t byte, const std::string& msg) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream os;
  os << "parse error at line " << line << " column " << col << ": " << msg;
  fail(errc::parse_error, os.str());
}

Rat coef_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(static_cast<long>(j.get<long long>())));
  fail(errc::parse_error, "coefficient must be an integer or a \"p/q\" string");
}

}  // namespace

SystemFile parse_system_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail_at(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
  }
  if (!j.is_object()) fail(errc::parse_error, "top level must be an object");
  if (!j.contains("vars") || !j["vars"].is_number_integer())
    fail(errc::parse_error, "missing integer field 'vars'");
  SystemFile sf;
  sf.raw = text;
  sf.vars = j["vars"].get<int>();
  if (sf.vars < 1) fail(errc::parse_error, "'vars' must be positive");
  if (!j.contains("polynomials") || !j["polynomials"].is_array() || j["polynomials"].empty())
    fail(errc::parse_error, "missing non-empty array 'polynomials'");

  for (const auto& jp : j["polynomials"]) {
    if (!jp.is_object() || !jp.contains("terms") || !jp["terms"].is_array() ||
        jp["terms"].empty())
      fail(errc::parse_error, "each polynomial needs a non-empty 'terms' array");
    std::vector<Term> terms;
    for (const auto& jt : jp["terms"]) {
      if (!jt.is_object() || !jt.contains("exp") || !jt.contains("coef"))
        fail(errc::parse_error, "each term needs 'exp' and 'coef'");
      const auto& je = jt["exp"];
      if (!je.is_array() || static_cast<int>(je.size()) != sf.vars)
        fail(errc::parse_error, "'exp' must be an array of length vars");
      IVec e;
      for (const auto& c : je) {
        if (!c.is_number_integer()) fail(errc::parse_error, "exponents must be integers");
        e.emplace_back(static_cast<long>(c.get<long long>()));
      }
      terms.push_back(Term{std::move(e), coef_from_json(jt["coef"])});
    }
    sf.polynomials.push_back(make_polynomial(sf.vars, std::move(terms)));
  }

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      fail(errc::parse_error, "'seed' must be an integer");
    sf.seed = j["seed"].get<uint64_t>();
  }
  if (j.contains("samples")) {
    if (!j["samples"].is_number_integer()) fail(errc::parse_error, "'samples' must be an integer");
    sf.samples = j["samples"].get<long>();
  }
  if (j.contains("box")) {
    const auto& jb = j["box"];
    if (!jb.is_array() || jb.size() != 4)
      fail(errc::parse_error, "'box' must be [xmin, xmax, ymin, ymax]");
    std::array<Rat, 4> box;
    for (int i = 0; i < 4; ++i) box[i] = coef_from_json(jb[i]);
    if (box[0] >= box[1] || box[2] >= box[3]) fail(errc::parse_error, "'box' must be nonempty");
    sf.box = box;
  }
  return sf;
}

SystemFile load_system_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_system_file(ss.str());
}

std::string input_digest(const std::string& raw) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : raw) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json report_envelope(const std::string& command, const SystemFile& input,
                               nlohmann::json results) {
  nlohmann::json j;
  j["command"] = command;
  j["input_digest"] = input_digest(input.raw);
  j["results"] = std::move(results);
  j["version"] = kToolVersion;
  return j;
}

std::string dump_report(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::internal, "cannot open '" + tmp + "' for writing");
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    fail(errc::internal, "cannot rename temporary output into place");
}

nlohmann::json j_int(const Int& v) { return v.get_str(); }

nlohmann::json j_rat(const Rat& v) { return rat_str(v); }

nlohmann::json j_ivec(const IVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(j_int(x));
  return a;
}

nlohmann::json j_qvec(const QVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(j_rat(x));
  return a;
}

}  // namespace tropint
