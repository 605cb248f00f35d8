#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rankring/decoder.hpp"
#include "rankring/pir.hpp"

namespace rankring {

using Json = nlohmann::ordered_json;

/// The algebra S over Z/eta a file refers to. Chain rings are the single
/// component case; `ring_json` keeps the form the file used so it can be
/// written back unchanged.
struct Algebra {
  PirExtension ext;
  Json ring_json;

  bool is_chain() const { return ext.size() == 1; }
  const Extension& chain() const;
};

struct CodeSpec {
  Algebra algebra;
  Matrix<ExtElem> gens;
  int n = 0;
};

struct InstanceSpec {
  Algebra algebra;
  std::optional<Matrix<ExtElem>> gens;
  Matrix<ExtElem> H;
  std::vector<ExtElem> s;
  std::optional<std::vector<ExtElem>> y;
  int r = 0;
  std::optional<int> t;

  /// Per-component RSD instance (single entry for chain rings).
  std::vector<RsdInstance> components() const;
};

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Algebra parse_algebra(const Json& j);
Json algebra_json(const Algebra& a);

ExtElem parse_elem(const Json& j, int m, std::uint64_t modulus, const std::string& field);
std::vector<ExtElem> parse_vector(const Json& j, int m, std::uint64_t modulus, const std::string& field);
Matrix<ExtElem> parse_matrix(const Json& j, int m, std::uint64_t modulus, const std::string& field);

Json elem_json(const ExtElem& x);
Json vector_json(const std::vector<ExtElem>& v);
Json matrix_json(const Matrix<ExtElem>& a);

CodeSpec parse_code(const Json& j);
Json code_json(const CodeSpec& c);
CodeSpec load_code(const std::string& path);

/// Parses an instance. H is always checked: free rows, and when generators
/// are present G H^T = 0 with rank(H) = n - k(C). A received word y, if
/// given, determines s (or must agree with it).
InstanceSpec parse_instance(const Json& j);
Json instance_json(const InstanceSpec& inst);
InstanceSpec load_instance(const std::string& path);

/// Power-basis element as ASCII, e.g. 4a^3+2a+5.
std::string format_elem(const ExtElem& x);
std::string format_vector(const std::vector<ExtElem>& v);

}  // namespace rankring
