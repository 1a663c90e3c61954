#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "derivant/constructors.hpp"
#include "derivant/perm_group.hpp"

namespace derivant {

// ---------------------------------------------------------------------------
// matrix-group data files
// ---------------------------------------------------------------------------

struct MatrixGroupData {
  unsigned p = 0, f = 0, d = 0;
  std::vector<Mat> matrices;
};

namespace detail {

inline std::uint64_t fnv1a64(const std::string &s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char *digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

} // namespace detail

/// Serialize in the canonical on-disk form (checksum over all prior lines).
inline std::string format_matrix_group_data(const MatrixGroupData &data) {
  std::string body = "matrix-group p=" + std::to_string(data.p) +
                     " f=" + std::to_string(data.f) +
                     " d=" + std::to_string(data.d) + "\n";
  for (const Mat &m : data.matrices) {
    std::string line;
    for (unsigned i = 0; i < m.d * m.d; ++i) {
      if (i)
        line += ' ';
      line += std::to_string(m.a[i]);
    }
    body += line + "\n";
  }
  return body + "checksum fnv1a64=" + detail::hex64(detail::fnv1a64(body)) + "\n";
}

/// Parse and checksum-verify a matrix-group data file.
inline MatrixGroupData parse_matrix_group_data(const std::string &content,
                                               const std::string &origin = "<data>") {
  std::istringstream in(content);
  std::string line;
  std::size_t lineno = 0;
  MatrixGroupData data;
  std::string body;
  bool have_header = false, have_checksum = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.rfind("checksum ", 0) == 0) {
      std::string expect = "fnv1a64=" + detail::hex64(detail::fnv1a64(body));
      if (line.substr(9) != expect)
        throw parse_error(origin + ": checksum mismatch (corrupt data file)",
                          lineno, 1);
      have_checksum = true;
      break;
    }
    body += line + "\n";
    if (!have_header) {
      std::istringstream hl(line);
      std::string tag, kv;
      hl >> tag;
      if (tag != "matrix-group")
        throw parse_error(origin + ": expected 'matrix-group' header", lineno, 1);
      while (hl >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
          throw parse_error(origin + ": malformed header field", lineno, 1);
        unsigned v = static_cast<unsigned>(std::stoul(kv.substr(eq + 1)));
        std::string key = kv.substr(0, eq);
        if (key == "p")
          data.p = v;
        else if (key == "f")
          data.f = v;
        else if (key == "d")
          data.d = v;
      }
      if (!data.p || !data.f || !data.d)
        throw parse_error(origin + ": header must set p, f, d", lineno, 1);
      have_header = true;
      continue;
    }
    std::istringstream ml(line);
    Mat m(data.d);
    unsigned q = 1;
    for (unsigned i = 0; i < data.f; ++i)
      q *= data.p;
    for (unsigned i = 0; i < data.d * data.d; ++i) {
      unsigned v;
      if (!(ml >> v) || v >= q)
        throw parse_error(origin + ": bad matrix entry", lineno, i + 1);
      m.a[i] = v;
    }
    data.matrices.push_back(std::move(m));
  }
  if (!have_header || !have_checksum)
    throw parse_error(origin + ": truncated data file (missing checksum)",
                      lineno + 1, 1);
  return data;
}

inline MatrixGroupData load_matrix_group_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw group_error("cannot open data file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix_group_data(ss.str(), path);
}

/// Affine permutation group q^d : <matrices> from a data file.
inline PermGroup affine_group_from_data(const MatrixGroupData &data) {
  Fq F(data.p, data.f);
  return affine_group(F, data.d, data.matrices);
}

/// The matrix group itself, acting on the nonzero vectors.
inline PermGroup linear_group_from_data(const MatrixGroupData &data) {
  Fq F(data.p, data.f);
  return nonzero_vector_action(F, data.d, data.matrices);
}

// ---------------------------------------------------------------------------
// declarative group specs
// ---------------------------------------------------------------------------

/// Parsed form of a .grp file: either explicit generators or a named family
/// with key=value parameters.
struct GroupSpec {
  // explicit
  std::size_t degree = 0;
  std::vector<std::string> cycle_lines;
  // family
  std::string family;
  std::map<std::string, std::string> params;

  bool is_family() const { return !family.empty(); }
};

inline GroupSpec parse_group_spec(const std::string &content,
                                  const std::string &origin = "<spec>") {
  GroupSpec spec;
  std::istringstream in(content);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    if (line[first] == '#')
      continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "degree") {
      if (spec.is_family() || spec.degree)
        throw parse_error(origin + ": duplicate or conflicting 'degree'", lineno, 1);
      long long n = -1;
      ls >> n;
      if (n < 1 || static_cast<std::size_t>(n) > max_degree)
        throw parse_error(origin + ": degree out of range", lineno, 8);
      spec.degree = static_cast<std::size_t>(n);
    } else if (word == "family") {
      if (spec.degree || spec.is_family())
        throw parse_error(origin + ": duplicate or conflicting 'family'", lineno, 1);
      ls >> spec.family;
      if (spec.family.empty())
        throw parse_error(origin + ": family name missing", lineno, 8);
      std::string kv;
      while (ls >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
          throw parse_error(origin + ": family parameter must be key=value",
                            lineno, 8);
        spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
    } else {
      if (!spec.degree)
        throw parse_error(origin + ": generators must follow a 'degree' line",
                          lineno, 1);
      spec.cycle_lines.push_back(line);
    }
  }
  if (!spec.degree && !spec.is_family())
    throw parse_error(origin + ": empty group spec", lineno + 1, 1);
  return spec;
}

namespace detail {

inline unsigned spec_uint(const GroupSpec &spec, const std::string &key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw group_error("family '" + spec.family + "' requires parameter '" +
                      key + "'");
  return static_cast<unsigned>(std::stoul(it->second));
}

inline unsigned spec_uint_or(const GroupSpec &spec, const std::string &key,
                             unsigned dflt) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? dflt
                                 : static_cast<unsigned>(std::stoul(it->second));
}

} // namespace detail

PermGroup build_group(const GroupSpec &spec, const std::string &data_dir);

/// Inline sub-spec token: "name:key=value:key=value".
inline PermGroup build_group_token(const std::string &token,
                                   const std::string &data_dir) {
  GroupSpec sub;
  std::istringstream ts(token);
  std::string part;
  std::getline(ts, sub.family, ':');
  while (std::getline(ts, part, ':')) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw group_error("inline family token parameter must be key=value: " + part);
    sub.params[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return build_group(sub, data_dir);
}

inline PermGroup build_group(const GroupSpec &spec, const std::string &data_dir) {
  if (!spec.is_family()) {
    std::vector<Perm> gens;
    std::size_t lineno = 1;
    for (const std::string &line : spec.cycle_lines)
      gens.push_back(parse_cycles(line, spec.degree, ++lineno));
    if (gens.empty())
      gens.push_back(Perm(spec.degree));
    return PermGroup(spec.degree, std::move(gens));
  }
  const std::string &f = spec.family;
  using detail::spec_uint;
  using detail::spec_uint_or;
  if (f == "cyclic")
    return cyclic(spec_uint(spec, "n"));
  if (f == "symmetric")
    return symmetric(spec_uint(spec, "n"));
  if (f == "alternating")
    return alternating(spec_uint(spec, "n"));
  if (f == "dihedral")
    return dihedral(spec_uint(spec, "order"));
  if (f == "quaternion8")
    return quaternion8();
  if (f == "direct") {
    auto a = build_group_token(spec.params.at("a"), data_dir);
    auto b = build_group_token(spec.params.at("b"), data_dir);
    return direct_product(a, b);
  }
  if (f == "wreath") {
    auto base = build_group_token(spec.params.at("base"), data_dir);
    return wreath_imprimitive(base, spec_uint(spec, "k"));
  }
  if (f == "central_product_d8_q8" || f == "central_product")
    return central_product_d8_q8();
  if (f == "extraspecial2") {
    auto it = spec.params.find("sign");
    char sign = (it != spec.params.end() && it->second == "plus") ? '+' : '-';
    return extraspecial2(spec_uint(spec, "m"), sign);
  }
  if (f == "metacyclic")
    return metacyclic(spec_uint(spec, "m"), spec_uint(spec, "n"),
                      spec_uint(spec, "r"));
  if (f == "out_group")
    return out_group(spec_uint(spec, "d"), spec_uint(spec, "f"),
                     spec_uint(spec, "p"));
  if (f == "agl")
    return agl(spec_uint_or(spec, "d", 1), spec_uint(spec, "q"));
  if (f == "asl")
    return asl(spec_uint_or(spec, "d", 1), spec_uint(spec, "q"));
  if (f == "agammal1")
    return agammal1(spec_uint(spec, "q"));
  if (f == "agl1_squares")
    return agl1_squares(spec_uint(spec, "q"));
  if (f == "gl")
    return gl(spec_uint(spec, "d"), spec_uint(spec, "q"));
  if (f == "sl")
    return sl(spec_uint(spec, "d"), spec_uint(spec, "q"));
  if (f == "psl")
    return psl(spec_uint(spec, "d"), spec_uint(spec, "q"));
  if (f == "pgl")
    return pgl(spec_uint(spec, "d"), spec_uint(spec, "q"));
  if (f == "pgammal")
    return pgammal(spec_uint(spec, "d"), spec_uint(spec, "q"));
  if (f == "holomorph") {
    auto kind = spec.params.find("kind");
    if (kind != spec.params.end() && kind->second == "cyclic")
      return holomorph_cyclic(spec_uint(spec, "n"));
    return holomorph_elementary(spec_uint(spec, "p"), spec_uint(spec, "d"));
  }
  if (f == "aut_psl3")
    return aut_psl3_points_lines(spec_uint_or(spec, "q", 7));
  if (f == "psl3_points_lines")
    return psl3_points_lines(spec_uint_or(spec, "q", 7));
  if (f == "data_file") {
    std::string path = spec.params.at("path");
    if (!path.empty() && path[0] != '/')
      path = data_dir + "/" + path;
    MatrixGroupData data = load_matrix_group_file(path);
    auto action = spec.params.find("action");
    if (action != spec.params.end() && action->second == "linear")
      return linear_group_from_data(data);
    return affine_group_from_data(data);
  }
  throw group_error("unknown family: " + f);
}

inline PermGroup load_group_file(const std::string &path,
                                 const std::string &data_dir) {
  std::ifstream in(path);
  if (!in)
    throw group_error("cannot open group spec: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return build_group(parse_group_spec(ss.str(), path), data_dir);
}

} // namespace derivant
