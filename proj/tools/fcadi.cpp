#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "fcadi/arrows.hpp"
#include "fcadi/dismantle.hpp"
#include "fcadi/io.hpp"
#include "fcadi/lattice.hpp"
#include "fcadi/serialize.hpp"

namespace {

// Exit codes: 0 ok, 1 negative verdict, 2 input error, 3 internal inconsistency.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInput = 2;
constexpr int kInconsistent = 3;

fcadi::ContextFormat parse_format(const std::string& fmt) {
  if (fmt.empty()) return fcadi::ContextFormat::Auto;
  if (fmt == "cxt") return fcadi::ContextFormat::Cxt;
  if (fmt == "csv") return fcadi::ContextFormat::Csv;
  throw fcadi::InputError("unknown format '" + fmt + "'");
}

std::string concept_text(const fcadi::FormalContext& ctx, const fcadi::FormalConcept& c) {
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
      if (!out.empty()) out += ", ";
      out += s;
    }
    return out;
  };
  return "({" + join(ctx.object_labels(c.extent)) + "}, {" + join(ctx.attribute_labels(c.intent)) +
         "})";
}

int cmd_concepts(const std::string& path, const std::string& fmt, bool list, bool json) {
  fcadi::ConceptLattice lat =
      fcadi::enumerate_concepts(fcadi::read_context_file(path, parse_format(fmt)));
  if (json) {
    std::cout << fcadi::concepts_json(lat).dump() << '\n';
  } else if (list) {
    for (const auto& c : lat.concepts) std::cout << concept_text(lat.context, c) << '\n';
  } else {
    std::cout << lat.concepts.size() << (lat.concepts.size() == 1 ? " concept" : " concepts")
              << '\n';
  }
  return kOk;
}

int cmd_arrows(const std::string& path, const std::string& fmt, bool json) {
  fcadi::FormalContext ctx = fcadi::read_context_file(path, parse_format(fmt));
  fcadi::ArrowTable table = fcadi::arrow_table(ctx);
  if (json) {
    std::cout << fcadi::arrows_json(ctx, table).dump() << '\n';
    return kOk;
  }
  // grid: X incident, d down-arrow, u up-arrow, b both, . none
  std::size_t w = 0;
  for (const auto& l : ctx.objects) w = std::max(w, l.size());
  std::cout << std::string(w, ' ');
  for (const auto& a : ctx.attributes) std::cout << ' ' << a;
  std::cout << '\n';
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    std::cout << ctx.objects[g] << std::string(w - ctx.objects[g].size(), ' ');
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
      char c = '.';
      if (ctx.incident(g, m)) {
        c = 'X';
      } else if (table.both(g, m)) {
        c = 'b';
      } else if (table.down(g, m)) {
        c = 'd';
      } else if (table.up(g, m)) {
        c = 'u';
      }
      std::cout << ' ' << std::string(ctx.attributes[m].size() > 1 ? ctx.attributes[m].size() - 1 : 0, ' ') << c;
    }
    std::cout << '\n';
  }
  return kOk;
}

int cmd_intervals(const std::string& path, const std::string& fmt) {
  fcadi::FormalContext ctx = fcadi::read_context_file(path, parse_format(fmt));
  fcadi::DismantlingIntervals found = fcadi::compute_all_dismantling_intervals(ctx);
  fcadi::ConceptLattice reduced = fcadi::enumerate_concepts(found.reduced);
  std::cout << fcadi::intervals_json(found, reduced).dump() << '\n';
  return kOk;
}

int cmd_check(const std::string& path, const std::string& fmt, const std::string& g,
              const std::string& m, bool oracle) {
  fcadi::FormalContext ctx = fcadi::read_context_file(path, parse_format(fmt));
  bool ctx_side = fcadi::is_interval_dismantling_context_side(ctx, g, m);
  std::cout << (ctx_side ? "dismantling" : "not dismantling") << '\n';
  if (oracle) {
    fcadi::ConceptLattice lat = fcadi::enumerate_concepts(ctx);
    bool lat_side = fcadi::is_dismantling(lat.order, lat.gamma(g), lat.mu(m));
    std::cout << "oracle: " << (lat_side ? "dismantling" : "not dismantling") << '\n';
    std::cout << "agreement: " << (ctx_side == lat_side ? "yes" : "no") << '\n';
    if (ctx_side != lat_side) return kInconsistent;
  }
  return ctx_side ? kOk : kNegative;
}

int cmd_dicore(const std::string& path, const std::string& fmt, const std::string& order,
               std::uint64_t seed, bool seeded, const std::string& trace_path, int check_unique) {
  fcadi::FormalContext ctx = fcadi::read_context_file(path, parse_format(fmt));
  fcadi::ConceptLattice lat = fcadi::enumerate_concepts(ctx);
  fcadi::OrderPolicy policy = fcadi::OrderPolicy::Lectic;
  if (seeded) {
    policy = fcadi::OrderPolicy::Seeded;
    std::cout << "order: seeded, seed: " << seed << '\n';
  } else {
    std::cout << "order: " << order << '\n';
  }
  fcadi::RemovalTrace trace = fcadi::di_core(lat, policy, seed);
  std::cout << "core size " << trace.core.size() << ", " << trace.steps.size()
            << (trace.steps.size() == 1 ? " step" : " steps") << '\n';
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw fcadi::InputError("cannot write '" + trace_path + "'");
    out << fcadi::trace_json(trace, lat).dump(2) << '\n';
  }
  if (check_unique > 0) {
    std::set<std::vector<int>> cores;
    cores.insert(trace.core);
    for (int i = 1; i <= check_unique; ++i) {
      cores.insert(fcadi::di_core(lat, fcadi::OrderPolicy::Seeded, seed + i).core);
    }
    bool identical = cores.size() == 1;
    std::cout << "cores identical: " << (identical ? "yes" : "no") << '\n';
    if (!identical) return kInconsistent;
  }
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& fmt, std::uint64_t seed) {
  fcadi::FormalContext ctx = fcadi::read_context_file(path, parse_format(fmt));
  std::cout << "seed: " << seed << '\n';
  std::vector<fcadi::CheckResult> results = fcadi::verify_context(ctx, seed);
  bool all = true;
  for (const auto& r : results) {
    std::cout << r.name << std::string(r.name.size() < 28 ? 28 - r.name.size() : 1, ' ')
              << (r.pass ? "pass" : "FAIL");
    if (!r.pass && !r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << '\n';
    all = all && r.pass;
  }
  return all ? kOk : kNegative;
}

int cmd_render(const std::string& path, const std::string& fmt, const std::string& dot_path,
               const std::vector<std::string>& highlights) {
  fcadi::FormalContext ctx = fcadi::read_context_file(path, parse_format(fmt));
  fcadi::ConceptLattice lat = fcadi::enumerate_concepts(ctx);
  fcadi::Bitset mark(lat.concepts.size());
  for (const std::string& h : highlights) {
    auto colon = h.find(':');
    if (colon == std::string::npos) {
      throw fcadi::InputError("highlight must be object:attribute, got '" + h + "'");
    }
    std::string g = h.substr(0, colon);
    std::string m = h.substr(colon + 1);
    int gi = lat.gamma(g);
    int mi = lat.mu(m);
    if (!lat.order.leq(gi, mi)) {
      throw fcadi::InputError("highlight " + h + " is not an interval: γ" + g + " is not below μ" +
                              m);
    }
    mark |= lat.order.interval_set(gi, mi);
  }
  std::string dot = fcadi::to_dot(lat, highlights.empty() ? nullptr : &mark);
  if (dot_path.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(dot_path);
    if (!out) throw fcadi::InputError("cannot write '" + dot_path + "'");
    out << dot;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"concept lattices, arrow relations and dismantling intervals of formal contexts"};
  app.require_subcommand(1);

  std::string format;
  app.add_option("--format", format, "input format (cxt or csv); inferred from the extension")
      ->check(CLI::IsMember({"cxt", "csv"}));

  std::string path, object, attribute, trace_path, dot_path, order = "lectic";
  std::uint64_t seed = 0;
  bool list = false, json = false, oracle = false;
  int check_unique = 0;
  std::vector<std::string> highlights;

  CLI::App* concepts = app.add_subcommand("concepts", "count or list all formal concepts");
  concepts->add_option("file", path)->required();
  concepts->add_flag("--count", "print the concept count (default)");
  concepts->add_flag("--list", list, "print every concept in lectic order");
  concepts->add_flag("--json", json, "print concepts as JSON");

  CLI::App* arrows = app.add_subcommand("arrows", "print the arrow relations");
  arrows->add_option("file", path)->required();
  arrows->add_flag("--json", json, "print arrows as JSON");

  CLI::App* intervals =
      app.add_subcommand("intervals", "compute all dismantling intervals (JSON)");
  intervals->add_option("file", path)->required();
  intervals->add_flag("--json", "JSON is already the default output");

  CLI::App* check = app.add_subcommand("check", "is the interval [γg, μm] dismantling?");
  check->add_option("file", path)->required();
  check->add_option("-g,--object", object)->required();
  check->add_option("-a,--attribute", attribute)->required();
  check->add_flag("--oracle", oracle, "cross-check against the lattice-side test");

  CLI::App* dicore = app.add_subcommand("dicore", "iterated removal down to the DI-core");
  dicore->add_option("file", path)->required();
  CLI::Option* seed_opt =
      dicore->add_option("--seed", seed, "random removal order with this seed");
  dicore->add_option("--order", order, "removal order (lectic)")
      ->check(CLI::IsMember({"lectic"}));
  dicore->add_option("--trace", trace_path, "write the removal trace as JSON");
  dicore->add_option("--check-unique", check_unique,
                     "re-run with this many seeded orders and compare cores");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite on one context");
  verify->add_option("file", path)->required();
  verify->add_option("--seed", seed, "seed for the randomized checks");

  CLI::App* render = app.add_subcommand("render", "emit the Hasse diagram as DOT");
  render->add_option("file", path)->required();
  render->add_option("--dot", dot_path, "output file (stdout when omitted)");
  render->add_option("--highlight", highlights, "fill the interval [γg, μm], given as g:m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (concepts->parsed()) return cmd_concepts(path, format, list, json);
    if (arrows->parsed()) return cmd_arrows(path, format, json);
    if (intervals->parsed()) return cmd_intervals(path, format);
    if (check->parsed()) return cmd_check(path, format, object, attribute, oracle);
    if (dicore->parsed()) {
      return cmd_dicore(path, format, order, seed, !seed_opt->empty(), trace_path, check_unique);
    }
    if (verify->parsed()) return cmd_verify(path, format, seed);
    if (render->parsed()) return cmd_render(path, format, dot_path, highlights);
  } catch (const fcadi::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const fcadi::StructureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const fcadi::NotDismantlingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kInconsistent;
  }
  return kOk;
}
