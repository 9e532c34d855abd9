#include "cyclemat/block_spec.hpp"

#include <optional>
#include <string>
#include <vector>

#include "cyclemat/constructions.hpp"
#include "cyclemat/cycle_matrix.hpp"
#include "cyclemat/io.hpp"

namespace cyclemat {

namespace {

using nlohmann::json;

const json &field(const json &spec, const char *name)
{
  if (!spec.contains(name))
    throw InputError(std::string("construction spec: missing \"") + name + "\"");
  return spec[name];
}

std::size_t size_field(const json &spec, const char *name)
{
  const json &v = field(spec, name);
  if (!v.is_number_integer() || v.get<long>() < 0)
    throw InputError(std::string("construction spec: \"") + name +
                     "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

Matrix factor_table(const json &f, const std::filesystem::path &base)
{
  auto resolve = [&](const std::string &p) {
    std::filesystem::path path(p);
    return path.is_relative() ? base / path : path;
  };
  if (f.is_string())
    return read_matrix_file(resolve(f.get<std::string>()));
  if (f.is_object() && f.contains("path"))
    return read_matrix_file(resolve(f["path"].get<std::string>()));
  if (f.is_object() && f.contains("trivial")) {
    std::size_t k = size_field(f, "trivial");
    if (k == 0)
      throw InputError("construction spec: trivial factor needs positive order");
    return trivial_solution(k).matrix();
  }
  return parse_matrix_json(f);
}

std::vector<Matrix> factor_tables(const json &spec, const std::filesystem::path &base)
{
  const json &fs = field(spec, "factors");
  if (!fs.is_array())
    throw InputError("construction spec: \"factors\" must be an array");
  std::vector<Matrix> out;
  for (const auto &f : fs)
    out.push_back(factor_table(f, base));
  return out;
}

std::vector<CycleMatrix> factors(const json &spec, const std::filesystem::path &base)
{
  std::vector<CycleMatrix> out;
  std::size_t idx = 0;
  for (auto &t : factor_tables(spec, base)) {
    ++idx;
    try {
      out.emplace_back(std::move(t));
    } catch (const InvalidCycleMatrix &e) {
      throw ConstructionError("factor " + std::to_string(idx) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Permutation> permutations(const json &spec, const char *name)
{
  const json &ps = field(spec, name);
  if (!ps.is_array())
    throw InputError(std::string("construction spec: \"") + name + "\" must be an array");
  std::vector<Permutation> out;
  for (const auto &p : ps)
    out.push_back(permutation_from_json(p));
  return out;
}

Matrix build(const json &spec, const std::filesystem::path &base_dir)
{
  if (!spec.is_object())
    throw InputError("construction spec must be a JSON object");
  const json &kind_field = field(spec, "kind");
  if (!kind_field.is_string())
    throw InputError("construction spec: \"kind\" must be a string");
  std::string kind = kind_field.get<std::string>();

  if (kind == "tensor") {
    auto fs = factors(spec, base_dir);
    if (fs.empty())
      throw ConstructionError("tensor needs at least one factor");
    CycleMatrix acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i)
      acc = tensor(acc, fs[i]);
    return acc.matrix();
  }
  if (kind == "partitioned") {
    std::size_t k1 = size_field(spec, "k1"), k2 = size_field(spec, "k2");
    if (k1 == 0 || k2 == 0)
      throw ConstructionError("partitioned construction needs positive k1 and k2");
    auto partition = field(spec, "partition").get<std::vector<std::size_t>>();
    auto a1 = permutations(spec, "alpha1");
    auto a2 = permutations(spec, "alpha2");
    return partitioned_construction(trivial_solution(k1), trivial_solution(k2), partition, a1, a2)
        .matrix();
  }
  if (kind == "union2") {
    auto fs = factors(spec, base_dir);
    auto as = permutations(spec, "alphas");
    if (fs.size() != 2 || as.size() != 2)
      throw ConstructionError("union2 needs exactly two factors and two alphas");
    return union2(fs[0], fs[1], as[0], as[1]).matrix();
  }
  if (kind == "union_iterated") {
    auto fs = factors(spec, base_dir);
    auto as = permutations(spec, "alphas");
    std::vector<std::optional<Permutation>> cumulative;
    if (spec.contains("cumulative"))
      for (const auto &c : spec["cumulative"])
        cumulative.push_back(c.is_null() ? std::nullopt
                                         : std::optional<Permutation>(permutation_from_json(c)));
    return union_iterated(fs, as, cumulative).matrix();
  }
  if (kind == "theta") {
    auto fs = factors(spec, base_dir);
    auto as = permutations(spec, "alphas");
    return theta_construction(fs, as, permutation_from_json(field(spec, "theta"))).matrix();
  }
  if (kind == "tower")
    return multiperm_tower(size_field(spec, "m")).matrix();
  if (kind == "abelian") {
    auto gens = permutations(spec, "generators");
    std::size_t degree = spec.contains("degree") ? size_field(spec, "degree")
                                                 : (gens.empty() ? 0 : gens[0].degree());
    return abelian_solution(gens, degree).matrix();
  }
  if (kind == "permutation")
    return permutation_solution(permutation_from_json(field(spec, "sigma"))).matrix();
  if (kind == "assemble") {
    BlockAssembly assembly;
    assembly.diagonal = factor_tables(spec, base_dir);
    if (spec.contains("blocks"))
      for (const auto &b : spec["blocks"]) {
        std::size_t row = size_field(b, "row"), col = size_field(b, "col");
        if (row == 0 || col == 0)
          throw InputError("construction spec: block indices are 1-based");
        assembly.off_diagonal.push_back({row - 1, col - 1, permutations(b, "rows")});
      }
    return assemble_blocks(assembly);
  }
  throw InputError("construction spec: unknown kind \"" + kind + "\"");
}

} // namespace

Matrix build_from_spec(const json &spec, const std::filesystem::path &base_dir)
{
  try {
    return build(spec, base_dir);
  } catch (const json::exception &e) {
    throw InputError(std::string("construction spec: ") + e.what());
  }
}

} // namespace cyclemat
