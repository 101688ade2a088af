/*
 *   Copyright 2026 The tropgeo Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "document.hpp"
#include "json.hpp"
#include "tropgeo/error.hpp"
#include "tropgeo/kleene.hpp"
#include "tropgeo/polytope.hpp"
#include "tropgeo/residuation.hpp"

namespace tropgeo::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kFallbackSeed = 1;

// Options whose values may start with '-' (negative coordinates).
const std::vector<std::string> kVectorOptions = {"--x", "--y", "--r", "--c"};

std::vector<std::string> join_vector_values(std::vector<std::string> args) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    const bool is_vector_option =
        std::find(kVectorOptions.begin(), kVectorOptions.end(), args[k]) !=
        kVectorOptions.end();
    if (is_vector_option && k + 1 < args.size()) {
      out.push_back(args[k] + "=" + args[k + 1]);
      ++k;
    } else {
      out.push_back(args[k]);
    }
  }
  return out;
}

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    auto value = std::stoull(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw ParseError("seed must be a non-negative integer, got '" + text + "'");
}

MatrixDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_matrix_document(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

struct Options {
  std::string file;
  std::string other;
  std::string x, y, r, c;
  std::string flavor;
  std::size_t position = 0;
  std::size_t trials = 500;
  std::string seed;
  bool emit_csv = false;
  bool checked = false;
  bool guided = false;
  bool assert_true = false;
  bool verbose = false;
};

class Session {
 public:
  Session(const Options& o, std::ostream& out, std::ostream& err,
          std::optional<std::string> default_seed)
      : o_(o), out_(out), err_(err), default_seed_(std::move(default_seed)) {}

  MatrixDocument document() const {
    auto doc = load_document(o_.file);
    if (!o_.flavor.empty()) doc.flavor = parse_flavor(o_.flavor);
    return doc;
  }
  Polytope polytope() const {
    auto doc = document();
    return Polytope(doc.flavor, doc.matrix);
  }
  static TropVector vec(const std::string& text, const char* flag) {
    if (text.empty()) throw ParseError(std::string(flag) + " is required");
    return TropVector::parse(text);
  }
  std::uint64_t seed() const {
    if (!o_.seed.empty()) return parse_seed(o_.seed);
    if (default_seed_) return parse_seed(*default_seed_);
    return kFallbackSeed;
  }

  void summary(const std::string& line) const {
    if (o_.verbose) err_ << line << '\n';
  }

  int boolean(bool value, const std::string& what) const {
    out_ << (value ? "true" : "false") << '\n';
    summary(what + ": " + (value ? "true" : "false"));
    return finish(value);
  }
  int json(const Json& doc, bool value = true) const {
    out_ << doc.dump(2) << '\n';
    return finish(value);
  }
  int finish(bool value) const {
    if (o_.assert_true && !value) {
      err_ << "assertion failed: result is false\n";
      return kAssertionFailed;
    }
    return kSuccess;
  }

  std::ostream& out() const { return out_; }
  const Options& opts() const { return o_; }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<std::string> default_seed_;
};

Json matrix_json(Flavor flavor, const TropMatrix& m, Role role) {
  return to_json(MatrixDocument{flavor, role, m});
}

int cmd_bracket(const Session& s) {
  auto x = Session::vec(s.opts().x, "--x");
  auto y = Session::vec(s.opts().y, "--y");
  auto b = bracket(x, y);
  s.out() << b.str() << '\n';
  s.summary("<" + x.str() + "|" + y.str() + "> = " + b.str());
  return kSuccess;
}

int cmd_dominates(const Session& s) {
  auto x = Session::vec(s.opts().x, "--x");
  const auto i = s.opts().position;
  if (!s.opts().file.empty()) {
    return s.boolean(dominates_polytope_at(x, s.polytope(), i),
                     x.str() + " dominates polytope in position " +
                         std::to_string(i));
  }
  auto y = Session::vec(s.opts().y, "--y");
  return s.boolean(dominates_at(x, y, i), x.str() + " dominates " + y.str() +
                                              " in position " +
                                              std::to_string(i));
}

int cmd_member(const Session& s) {
  auto y = Session::vec(s.opts().y, "--y");
  return s.boolean(member(s.polytope(), y), "member " + y.str());
}

int cmd_reduce(const Session& s) {
  auto p = s.polytope();
  auto reduced = reduce_generators(p);
  s.summary("kept " + std::to_string(reduced.generator_count()) + " of " +
            std::to_string(p.generator_count()) + " generators");
  return s.json(matrix_json(reduced.flavor(), reduced.generators(),
                            Role::GeneratorsAsColumns));
}

int cmd_project(const Session& s) {
  std::vector<TropVector> points;
  if (!s.opts().x.empty()) {
    points.push_back(Session::vec(s.opts().x, "--x"));
  } else {
    points = s.document().matrix.columns();
  }
  std::vector<ProjectivePoint> projected;
  for (const auto& p : points) projected.push_back(projectivise(p));

  if (s.opts().emit_csv) {
    const std::size_t dim = projected.front().coords.size();
    if (dim == 2) {
      s.out() << "x,y\n";
    } else {
      for (std::size_t k = 0; k < dim; ++k) {
        s.out() << (k ? "," : "") << 'x' << (k + 1);
      }
      s.out() << '\n';
    }
    for (const auto& p : projected) {
      for (std::size_t k = 0; k < dim; ++k) {
        s.out() << (k ? "," : "") << p.coords[k].str();
      }
      s.out() << '\n';
    }
    return kSuccess;
  }
  Json doc;
  auto list = Json::array();
  for (const auto& p : projected) list.push_back(p.coords.str());
  doc["points"] = std::move(list);
  return s.json(doc);
}

int cmd_equal(const Session& s) {
  if (s.opts().other.empty()) throw ParseError("--other is required");
  auto p = s.polytope();
  auto other = load_document(s.opts().other);
  return s.boolean(polytope_equal(p, Polytope(other.flavor, other.matrix)),
                   "polytopes equal");
}

int cmd_star_check(const Session& s) {
  auto doc = s.document();
  return s.boolean(is_kleene_star(doc.flavor, doc.matrix),
                   std::string(to_string(doc.flavor)) + " Kleene star");
}

int cmd_dominator(const Session& s) {
  auto d = dominator(s.polytope());
  s.summary("dominator " + d.matrix().str());
  return s.json(matrix_json(d.flavor(), d.matrix(), Role::Matrix));
}

int cmd_dominator_dual(const Session& s) {
  auto d = dominator_dual(s.polytope());
  s.summary("max-plus dominator " + d.matrix().str());
  return s.json(matrix_json(d.flavor(), d.matrix(), Role::Matrix));
}

int cmd_hull_min(const Session& s) {
  auto hull = min_plus_hull(s.polytope());
  return s.json(matrix_json(hull.flavor(), hull.generators(),
                            Role::GeneratorsAsColumns));
}

int cmd_convex_check(const Session& s) {
  return s.boolean(is_min_plus_convex(s.polytope()), "min-plus convex");
}

int cmd_classify(const Session& s) {
  auto c = classify(s.polytope());
  Json doc;
  doc["is_polytrope"] = c.is_polytrope;
  doc["is_min_plus_convex"] = c.is_min_plus_convex;
  doc["witness"] = c.witness ? Json(c.witness->str()) : Json(nullptr);
  doc["witness_index"] = c.witness_index ? Json(*c.witness_index) : Json(nullptr);
  doc["dominator"] =
      matrix_json(c.dominator.flavor(), c.dominator.matrix(), Role::Matrix);
  s.summary(std::string(c.is_polytrope ? "polytrope" : "not a polytrope") +
            (c.witness ? "; witness " + c.witness->str() : ""));
  return s.json(doc, c.is_polytrope);
}

int cmd_dual(const Session& s, bool rho) {
  auto a = s.document().matrix;
  const auto& text = rho ? s.opts().r : s.opts().c;
  auto v = Session::vec(text, rho ? "--r" : "--c");
  TropVector result =
      rho ? (s.opts().checked ? duality_rho_checked(a, v) : duality_rho(a, v))
          : (s.opts().checked ? duality_chi_checked(a, v) : duality_chi(a, v));
  Json doc;
  doc["vector"] = result.str();
  return s.json(doc);
}

int cmd_dom_relation(const Session& s) {
  return s.boolean(verify_dominator_relation(s.polytope()),
                   "max-plus dominator == -(min-plus dominator)^T");
}

int cmd_sample_midpoints(const Session& s) {
  auto p = s.polytope();
  const auto seed = s.seed();
  auto report = s.opts().guided
                    ? guided_midpoint_search(p, s.opts().trials, seed)
                    : sample_euclidean_midpoints(p, s.opts().trials, seed);
  Json doc;
  doc["trials"] = report.trials;
  doc["seed"] = seed;
  doc["guided"] = s.opts().guided;
  auto list = Json::array();
  for (const auto& v : report.violations) list.push_back(v.str());
  doc["violations"] = std::move(list);
  s.summary(std::to_string(report.violations.size()) + " violation(s) in " +
            std::to_string(report.trials) + " trials");
  return s.json(doc, report.violations.empty());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::optional<std::string> default_seed) {
  CLI::App app{"tropgeo: max-plus / min-plus convexity toolkit", "tropgeo"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--file", o.file, "matrix document (JSON)");
    if (required) opt->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--verbose", o.verbose, "summary on standard error");
  };
  auto add_assert = [&](CLI::App* sub) {
    sub->add_flag("--assert", o.assert_true, "exit 3 if the result is false");
  };

  using Handler = std::function<int(const Session&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto command = [&](const std::string& name, const std::string& help,
                     Handler h) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    commands.emplace_back(sub, std::move(h));
    return sub;
  };

  {
    auto* sub = command("bracket", "residuation bracket <x|y>", cmd_bracket);
    sub->add_option("--x", o.x)->required();
    sub->add_option("--y", o.y)->required();
  }
  {
    auto* sub = command("dominates",
                        "does x dominate y (or the polytope in --file) at --i",
                        cmd_dominates);
    sub->add_option("--x", o.x)->required();
    sub->add_option("--y", o.y);
    add_file(sub, false);
    sub->add_option("--i", o.position, "0-based position")->required();
    add_assert(sub);
  }
  {
    auto* sub = command("member", "membership of --y in the span", cmd_member);
    add_file(sub);
    sub->add_option("--y", o.y)->required();
    add_assert(sub);
  }
  add_file(command("reduce", "drop redundant generators", cmd_reduce));
  {
    auto* sub = command("project", "projectivise generators (or --x)",
                        cmd_project);
    add_file(sub, false);
    sub->add_option("--x", o.x);
    sub->add_flag("--emit-csv", o.emit_csv, "write CSV instead of JSON");
  }
  {
    auto* sub = command("equal", "extensional equality of two polytopes",
                        cmd_equal);
    add_file(sub);
    sub->add_option("--other", o.other)->required();
    add_assert(sub);
  }
  {
    auto* sub = command("star-check", "is the matrix a Kleene star",
                        cmd_star_check);
    add_file(sub);
    sub->add_option("--flavor", o.flavor, "max-plus or min-plus");
    add_assert(sub);
  }
  add_file(command("dominator", "min-plus dominator of a max-plus polytope",
                   cmd_dominator));
  add_file(command("dominator-dual",
                   "max-plus dominator of a min-plus polytope",
                   cmd_dominator_dual));
  add_file(command("hull-min", "min-plus hull as a max-plus polytope",
                   cmd_hull_min));
  {
    auto* sub = command("convex-check", "is the max-plus polytope min-plus convex",
                        cmd_convex_check);
    add_file(sub);
    add_assert(sub);
  }
  {
    auto* sub = command("classify", "polytrope decision with dominator and witness",
                        cmd_classify);
    add_file(sub);
    add_assert(sub);
  }
  {
    auto* sub = command("dual-rho", "A (x) (-r)^T",
                        [](const Session& s) { return cmd_dual(s, true); });
    add_file(sub);
    sub->add_option("--r", o.r)->required();
    sub->add_flag("--checked", o.checked, "verify r is in the row space");
  }
  {
    auto* sub = command("dual-chi", "(-c)^T (x) A",
                        [](const Session& s) { return cmd_dual(s, false); });
    add_file(sub);
    sub->add_option("--c", o.c)->required();
    sub->add_flag("--checked", o.checked, "verify c is in the column space");
  }
  {
    auto* sub = command("dom-relation",
                        "check max-plus dominator == -(min-plus dominator)^T",
                        cmd_dom_relation);
    add_file(sub);
    add_assert(sub);
  }
  {
    auto* sub = command("sample-midpoints", "Euclidean convexity falsifier",
                        cmd_sample_midpoints);
    add_file(sub);
    sub->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "overrides TROPGEO_SEED");
    sub->add_flag("--guided", o.guided, "steer sampling with the classify witness");
    add_assert(sub);
  }

  auto normalized = join_vector_values(args);
  std::vector<std::string> reversed(normalized.rbegin(), normalized.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  Session session(o, out, err, std::move(default_seed));
  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      return handler(session);
    } catch (const ParseError& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    } catch (const DimensionError& e) {
      err << "error: " << e.what() << '\n';
      return kPreconditionError;
    } catch (const PreconditionError& e) {
      err << "error: " << e.what() << '\n';
      return kPreconditionError;
    }
  }
  return kInputError;
}

}  // namespace tropgeo::cli
