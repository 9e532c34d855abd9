#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclemat/action.hpp"
#include "cyclemat/block_spec.hpp"
#include "cyclemat/constructions.hpp"
#include "cyclemat/cycle_matrix.hpp"
#include "cyclemat/enumeration.hpp"
#include "cyclemat/io.hpp"
#include "cyclemat/retraction.hpp"
#include "cyclemat/structure.hpp"

namespace cyclemat::cli {

namespace {

using nlohmann::json;

enum class Status
{
  Ok,
  Negative,
};

struct Outcome
{
  Status status = Status::Ok;
  std::string text;
  json result = json::object();
};

// Failure the user can fix: bad arguments, unreadable or malformed input.
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class Session
{
public:
  explicit Session(std::istream &in)
  : in_(in)
  {}

  Matrix table(const std::string &source)
  {
    if (source != "-")
      return read_matrix_file(source);
    return parse_matrix(stdin_text());
  }

  std::string text(const std::string &source)
  {
    if (source == "-")
      return stdin_text();
    std::ifstream f(source);
    if (!f)
      throw std::runtime_error("cannot open " + source);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  CycleMatrix cycle_matrix(const std::string &source)
  {
    Matrix t = table(source);
    auto report = validate(t);
    if (!report.valid)
      throw UsageError(source + ": not a cycle matrix (" + report.describe() + ")");
    return CycleMatrix::assume_valid(std::move(t));
  }

private:
  std::string stdin_text()
  {
    if (stdin_used_)
      throw UsageError("stdin can be read only once");
    stdin_used_ = true;
    return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
  }

  std::istream &in_;
  bool stdin_used_ = false;
};

json permutations_json(const std::vector<Permutation> &ps)
{
  json out = json::array();
  for (auto const &p : ps)
    out.push_back(permutation_to_json(p));
  return out;
}

json labels_json(const std::vector<Label> &labels)
{
  json out = json::array();
  for (Label l : labels)
    out.push_back(l + 1);
  return out;
}

std::string join_labels(const std::vector<Label> &labels)
{
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i)
    s += (i ? "," : "") + std::to_string(labels[i] + 1);
  return s;
}

DedupMode parse_mode(const std::string &mode)
{
  if (mode == "auto")
    return DedupMode::Automatic;
  if (mode == "keys")
    return DedupMode::CanonicalKeys;
  if (mode == "orderly")
    return DedupMode::Orderly;
  throw UsageError("unknown mode \"" + mode + "\" (expected auto, keys or orderly)");
}

Outcome check(Session &s, const std::string &file)
{
  Matrix t = s.table(file);
  auto report = validate(t);
  Outcome o;
  o.status = report.valid ? Status::Ok : Status::Negative;
  o.text = report.describe() + "\n";
  o.result["valid"] = report.valid;
  if (report.violation)
    o.result["violation"] = {{"axiom", to_string(report.violation->axiom)},
                             {"witness", report.violation->witness}};
  return o;
}

Outcome canon(Session &s, const std::string &file)
{
  auto c = canonical_form(s.cycle_matrix(file));
  Outcome o;
  o.text = format_matrix(c.matrix.matrix());
  o.result = {{"matrix", matrix_to_json(c.matrix.matrix())},
              {"labeling", permutation_to_json(c.labeling)}};
  return o;
}

Outcome iso(Session &s, const std::string &a, const std::string &b)
{
  auto ma = s.cycle_matrix(a);
  auto mb = s.cycle_matrix(b);
  auto sigma = are_isomorphic(ma, mb);
  Outcome o;
  o.result["isomorphic"] = sigma.has_value();
  if (sigma) {
    o.text = sigma->to_string() + "\n";
    o.result["sigma"] = permutation_to_json(*sigma);
  } else {
    o.status = Status::Negative;
    o.text = "not isomorphic\n";
  }
  return o;
}

Outcome aut(Session &s, const std::string &file, bool count_only)
{
  auto group = automorphisms(s.cycle_matrix(file));
  Outcome o;
  o.text = std::to_string(group.size()) + "\n";
  if (!count_only)
    for (auto const &g : group)
      o.text += g.to_string() + "\n";
  o.result["count"] = group.size();
  if (!count_only)
    o.result["automorphisms"] = permutations_json(group);
  return o;
}

Outcome retract(Session &s, const std::string &file, bool chain)
{
  auto m = s.cycle_matrix(file);
  Outcome o;
  if (!chain) {
    auto r = retract_once(m);
    o.text = format_matrix(r.quotient.matrix());
    o.result = {{"matrix", matrix_to_json(r.quotient.matrix())},
                {"class_map", labels_json(r.class_map)}};
    return o;
  }
  auto c = retraction_chain(m);
  json stages = json::array(), maps = json::array();
  for (std::size_t t = 0; t < c.stages.size(); ++t) {
    if (t)
      o.text += "\n";
    o.text += format_matrix(c.stages[t].matrix());
    stages.push_back(matrix_to_json(c.stages[t].matrix()));
  }
  for (auto const &cm : c.class_maps)
    maps.push_back(labels_json(cm));
  bool terminates = c.outcome == RetractionChain::Outcome::Terminates;
  o.result = {{"stages", stages},
              {"class_maps", maps},
              {"outcome", terminates ? "terminates" : "irretractable"}};
  return o;
}

Outcome level(Session &s, const std::string &file)
{
  auto l = multipermutation_level(s.cycle_matrix(file));
  Outcome o;
  o.result["level"] = l ? json(*l) : json(nullptr);
  if (l) {
    o.text = std::to_string(*l) + "\n";
  } else {
    o.status = Status::Negative;
    o.text = "irretractable\n";
  }
  return o;
}

Outcome orbits(Session &s, const std::string &file)
{
  auto orbs = point_orbits(s.cycle_matrix(file));
  Outcome o;
  json list = json::array();
  for (auto const &orb : orbs) {
    o.text += join_labels(orb) + "\n";
    list.push_back(labels_json(orb));
  }
  o.result = {{"orbits", list}, {"decomposable", orbs.size() > 1}};
  return o;
}

Outcome det(Session &s, const std::string &file)
{
  // Defined on any table; the axioms are not required.
  std::string value = determinant(s.table(file)).str();
  Outcome o;
  o.text = value + "\n";
  o.result["determinant"] = value;
  return o;
}

Outcome transpose_check(Session &s, const std::string &file)
{
  bool yes = is_transpose_cycle_matrix(s.cycle_matrix(file));
  Outcome o;
  o.status = yes ? Status::Ok : Status::Negative;
  o.text = yes ? "transpose cycle matrix\n" : "transpose is not a cycle matrix\n";
  o.result["transpose"] = yes;
  return o;
}

Outcome matrix_outcome(const Matrix &m)
{
  Outcome o;
  o.text = format_matrix(m);
  o.result["matrix"] = matrix_to_json(m);
  o.result["valid"] = validate(m).valid;
  return o;
}

struct BuildArgs
{
  std::string kind;
  std::optional<std::size_t> m;
  std::optional<std::string> sigma;
  std::optional<std::size_t> order;
  std::optional<std::string> spec;
};

Outcome build(Session &s, const BuildArgs &a)
{
  if (a.spec) {
    if (!a.kind.empty())
      throw UsageError("build: give either a kind or --spec");
    json spec;
    std::string text = s.text(*a.spec);
    std::filesystem::path base =
        *a.spec == "-" ? std::filesystem::path() : std::filesystem::path(*a.spec).parent_path();
    try {
      spec = json::parse(text);
    } catch (const json::parse_error &e) {
      throw InputError(std::string("construction spec: ") + e.what());
    }
    return matrix_outcome(build_from_spec(spec, base));
  }
  if (a.kind == "tower") {
    if (!a.m)
      throw UsageError("build tower: --m is required");
    return matrix_outcome(multiperm_tower(*a.m).matrix());
  }
  if (a.kind == "permutation") {
    if (!a.sigma)
      throw UsageError("build permutation: --sigma is required");
    return matrix_outcome(permutation_solution(parse_permutation(*a.sigma)).matrix());
  }
  if (a.kind == "trivial") {
    if (!a.order || *a.order == 0)
      throw UsageError("build trivial: --n must be positive");
    return matrix_outcome(trivial_solution(*a.order).matrix());
  }
  if (a.kind.empty())
    throw UsageError("build: missing kind (tower, permutation, trivial) or --spec");
  throw UsageError("build: unknown kind \"" + a.kind + "\"");
}

struct EnumArgs
{
  std::size_t n = 0;
  bool classes = false;
  bool count_only = false;
  std::size_t jobs = 1;
  std::string mode = "auto";
};

Outcome enumerate(const EnumArgs &a)
{
  std::vector<CycleMatrix> found;
  std::uint64_t raw_count = 0;
  SearchStats stats;
  if (a.classes) {
    auto e = enumerate_classes(a.n, a.jobs, parse_mode(a.mode));
    found = std::move(e.classes);
    raw_count = e.raw_count;
    stats = e.stats;
  } else {
    stats = for_each_cycle_matrix(a.n, [&](const CycleMatrix &m) {
      if (!a.count_only)
        found.push_back(m);
      ++raw_count;
      return true;
    });
  }
  std::uint64_t count = a.classes ? found.size() : raw_count;
  Outcome o;
  o.text = std::to_string(count) + "\n";
  o.result = {{"n", a.n},
              {"classes", a.classes},
              {"count", count},
              {"raw_count", raw_count},
              {"stats", {{"nodes", stats.nodes}, {"prunes", stats.prunes}}}};
  if (!a.count_only) {
    json list = json::array();
    for (auto const &m : found) {
      o.text += "\n" + format_matrix(m.matrix());
      list.push_back(matrix_to_json(m.matrix()));
    }
    o.result["matrices"] = list;
  }
  return o;
}

struct CensusArgs
{
  std::size_t n = 0;
  EnumFilter filter;
  std::size_t jobs = 1;
  std::string mode = "auto";
  std::optional<std::string> dump;
};

Outcome run_census(const CensusArgs &a)
{
  auto report = census(a.n, a.filter, a.jobs, parse_mode(a.mode));
  if (a.dump) {
    std::filesystem::path dir(*a.dump);
    std::filesystem::create_directories(dir);
    std::size_t width = std::to_string(report.matching.size()).size();
    for (std::size_t i = 0; i < report.matching.size(); ++i) {
      std::ostringstream name;
      name << std::setw(static_cast<int>(width)) << std::setfill('0') << i + 1 << ".txt";
      std::ofstream f(dir / name.str());
      if (!f)
        throw std::runtime_error("cannot write " + (dir / name.str()).string());
      f << format_matrix(report.matching[i].matrix());
    }
  }
  Outcome o;
  o.text = report.to_table();
  o.result = report.to_json();
  return o;
}

void add_filter_flag(CLI::App &cmd, const std::string &name, std::optional<bool> &target,
                     const std::string &help)
{
  cmd.add_flag_callback("--" + name, [&target] { target = true; }, help);
  cmd.add_flag_callback("--no-" + name, [&target] { target = false; }, "negation of --" + name);
}

json envelope(const std::string &command, const char *status)
{
  return {{"command", command}, {"status", status}};
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        std::istream &in)
{
  CLI::App app{"Cycle matrices: validation, isomorphism, retraction, constructions and "
               "enumeration."};
  app.name("cyclemat");
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  Session session(in);
  std::function<Outcome()> action;
  std::string command;

  std::string f1, f2;
  auto file_cmd = [&](const char *name, const char *help, auto body) {
    auto *cmd = app.add_subcommand(name, help);
    cmd->add_option("matrix", f1, "matrix file, - for stdin")->required();
    cmd->callback([&, name, body] {
      command = name;
      action = [&, body] { return body(); };
    });
    return cmd;
  };

  file_cmd("check", "check the cycle-matrix axioms", [&] { return check(session, f1); });
  file_cmd("canon", "canonical form (least matrix of the isomorphism class)",
           [&] { return canon(session, f1); });
  {
    auto *cmd = app.add_subcommand("iso", "find an isomorphism A -> B");
    cmd->add_option("a", f1, "first matrix")->required();
    cmd->add_option("b", f2, "second matrix")->required();
    cmd->callback([&] {
      command = "iso";
      action = [&] { return iso(session, f1, f2); };
    });
  }
  bool count_only = false;
  file_cmd("aut", "automorphism group", [&] { return aut(session, f1, count_only); })
      ->add_flag("--count", count_only, "print the group order only");
  bool chain = false;
  file_cmd("retract", "retraction", [&] { return retract(session, f1, chain); })
      ->add_flag("--chain", chain, "iterate until one point or an irretractable stage");
  file_cmd("level", "multipermutation level", [&] { return level(session, f1); });
  file_cmd("orbits", "orbits of the permutation group", [&] { return orbits(session, f1); });
  file_cmd("det", "determinant of the table", [&] { return det(session, f1); });
  file_cmd("transpose-check", "is the transpose a cycle matrix",
           [&] { return transpose_check(session, f1); });

  BuildArgs build_args;
  {
    auto *cmd = app.add_subcommand("build", "construct a matrix");
    cmd->add_option("kind", build_args.kind, "tower, permutation or trivial");
    cmd->add_option("--m", build_args.m, "tower height (order 2^m)");
    cmd->add_option("--sigma", build_args.sigma, "permutation as 1-based images, e.g. 2,3,1");
    cmd->add_option("--n", build_args.order, "order of the trivial solution");
    cmd->add_option("--spec", build_args.spec, "JSON construction spec, - for stdin");
    cmd->callback([&] {
      command = "build";
      action = [&] { return build(session, build_args); };
    });
  }

  EnumArgs enum_args;
  {
    auto *cmd = app.add_subcommand("enumerate", "all cycle matrices of order N");
    cmd->add_option("N", enum_args.n, "order")->required()->check(CLI::PositiveNumber);
    cmd->add_flag("--classes", enum_args.classes, "one canonical representative per class");
    cmd->add_flag("--count", enum_args.count_only, "print the count only");
    cmd->add_option("--jobs", enum_args.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--mode", enum_args.mode, "auto, keys or orderly");
    cmd->callback([&] {
      command = "enumerate";
      action = [&] { return enumerate(enum_args); };
    });
  }

  CensusArgs census_args;
  {
    auto *cmd = app.add_subcommand("census", "class counts of order N with optional filters");
    cmd->add_option("N", census_args.n, "order")->required()->check(CLI::PositiveNumber);
    auto &f = census_args.filter;
    add_filter_flag(*cmd, "square-free", f.square_free, "identity diagonal");
    add_filter_flag(*cmd, "indecomposable", f.indecomposable, "single point orbit");
    add_filter_flag(*cmd, "transpose", f.transpose, "transpose is a cycle matrix");
    add_filter_flag(*cmd, "permutation-only", f.permutation_only, "all rows equal");
    cmd->add_option("--max-level", f.max_level, "retractable to one point in at most L steps");
    cmd->add_option("--jobs", census_args.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--mode", census_args.mode, "auto, keys or orderly");
    cmd->add_option("--dump", census_args.dump, "write matching representatives to DIR");
    cmd->callback([&] {
      command = "census";
      action = [&] { return run_census(census_args); };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    bool want_json = std::find(args.begin(), args.end(), "--json") != args.end();
    if (want_json) {
      json j = envelope(command, "error");
      j["error"] = e.what();
      out << j.dump(2) << "\n";
    }
    err << "cyclemat: " << e.what() << "\n";
    if (!want_json)
      err << "run 'cyclemat --help' for usage\n";
    return exit_error;
  }

  try {
    Outcome o = action();
    if (as_json) {
      json j = envelope(command, o.status == Status::Ok ? "ok" : "negative");
      j["result"] = std::move(o.result);
      out << j.dump(2) << "\n";
    } else {
      out << o.text;
    }
    return o.status == Status::Ok ? exit_ok : exit_negative;
  } catch (const std::exception &e) {
    // Input, usage and construction errors all end here.
    if (as_json) {
      json j = envelope(command, "error");
      j["error"] = e.what();
      out << j.dump(2) << "\n";
    }
    err << "cyclemat " << command << ": " << e.what() << "\n";
    return exit_error;
  }
}

} // namespace cyclemat::cli
