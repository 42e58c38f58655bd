#include "graphon/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "graphon/core_ops.hpp"
#include "graphon/cutnorm.hpp"
#include "graphon/decorated.hpp"
#include "graphon/densities.hpp"
#include "graphon/errors.hpp"
#include "graphon/graph.hpp"
#include "graphon/step_io.hpp"
#include "graphon/universal/descriptor.hpp"
#include "graphon/universal/pairing.hpp"
#include "graphon/verify/encoding_checks.hpp"
#include "graphon/verify/lemmas.hpp"
#include "graphon/verify/report.hpp"
#include "graphon/verify/structure.hpp"
#include "graphon/verify/target.hpp"

namespace graphon {

namespace {

struct Common {
  unsigned depth = 8;
  std::size_t bits = 64;
  std::size_t grid = 4096;
  bool exact = false;
  std::string out_path;
  int threads = 0;
};

void add_build_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--depth", c.depth, "truncation depth D")->capture_default_str();
  cmd->add_option("--bits", c.bits, "bit budget P")->capture_default_str();
  cmd->add_option("--grid", c.grid, "quadrature / grid resolution")->capture_default_str();
  cmd->add_flag("--exact", c.exact, "exact rational mode");
}

UniversalOptions options_of(const Common& c, const std::string& order) {
  UniversalOptions o;
  o.depth = c.depth;
  o.bits = c.bits;
  o.resolution = c.grid;
  std::istringstream words(order);
  std::string name;
  while (words >> name) {
    const auto p = parse_part(name);
    if (!p) throw ValidationError("unknown part '" + name + "'");
    o.order.push_back(*p);
  }
  return o;
}

StepGraphon step_of(const std::string& spec) {
  const GraphonPtr g = resolve_wf(spec);
  if (g->step()) return *g->step();
  if (spec == "half") throw ValidationError("'" + spec + "' is not a step graphon");
  return to_double_graphon(resolve_exact_wf(spec));
}

std::string rational_text(const Rational& r) { return to_string(r); }

// Writes to --out when given, else to the command output.
void emit(const Common& c, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (c.out_path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(c.out_path);
  if (!file) throw ValidationError("cannot write " + c.out_path);
  body(file);
}

UniversalGraphon build_any(const std::string& w0_path, const std::string& wf, const Common& c,
                           const std::string& order) {
  if (!w0_path.empty()) return build_from_descriptor(load_descriptor(w0_path));
  if (wf.empty()) throw ValidationError("give --w0 or --wf");
  const UniversalOptions o = options_of(c, order);
  return c.exact ? build_universal(resolve_exact_wf(wf), o) : build_universal(resolve_wf(wf), o);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graphon toolkit"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--threads", c.threads, "worker threads (default: all cores)");

  std::string wf, w0_path, w_spec, graph_path, decorated_path, order;
  double x = 0.0, y = 0.0, eps = 0.25;
  std::vector<double> roots;
  bool induced = false, decode = false;
  std::size_t n = 0, max_iterations = 32;
  std::optional<std::uint64_t> seed;
  unsigned dmax = 2, base_depth = 0;

  auto* build = app.add_subcommand("build", "build the universal graphon and write a descriptor");
  build->add_option("--wf", wf, "W_F spec or step-graphon file")->required();
  build->add_option("--order", order, "part order, e.g. \"A B C D E F G P Q R\"");
  add_build_flags(build, c);
  build->add_option("--out", c.out_path, "descriptor path (default: stdout)");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a graphon at (x, y)");
  eval_cmd->add_option("--w0", w0_path, "universal-graphon descriptor");
  eval_cmd->add_option("--w", w_spec, "graphon spec or step-graphon file");
  eval_cmd->add_option("--x", x)->required();
  eval_cmd->add_option("--y", y)->required();

  auto* density = app.add_subcommand("density", "subgraph or decorated density in a step graphon");
  density->add_option("--w", w_spec, "step graphon spec or file")->required();
  density->add_option("--graph", graph_path, "graph file");
  density->add_option("--decorated", decorated_path, "decorated graph file");
  density->add_option("--roots", roots, "root coordinates")->delimiter(',');
  density->add_flag("--induced", induced, "induced density instead of homomorphism density");
  density->add_flag("--exact", c.exact, "exact rational mode");

  auto* gamma4 = app.add_subcommand("gamma4", "Gamma_4 density of a step function");
  gamma4->add_option("--w", w_spec, "step function spec or file")->required();
  gamma4->add_flag("--exact", c.exact, "exact rational mode");

  auto* cut = app.add_subcommand("cutnorm", "cut norm of a step function");
  cut->add_option("--w", w_spec, "step function spec or file")->required();

  auto* reg = app.add_subcommand("regularity", "weak regular partition of a step graphon");
  reg->add_option("--w", w_spec, "step graphon spec or file")->required();
  reg->add_option("--eps", eps, "target cut-norm distance")->capture_default_str();
  reg->add_option("--base-depth", base_depth, "start from the dyadic partition of this depth");
  reg->add_option("--max-iterations", max_iterations)->capture_default_str();

  auto* sample = app.add_subcommand("sample", "sample a W-random graph");
  sample->add_option("--w", w_spec, "graphon spec or step-graphon file")->required();
  sample->add_option("--n", n, "order")->required();
  sample->add_option("--seed", seed, "random seed")->required();
  sample->add_option("--out", c.out_path, "graph file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "check the identities of the built universal graphon");
  verify->add_option("--wf", wf, "W_F spec or step-graphon file");
  verify->add_option("--w0", w0_path, "universal-graphon descriptor");
  verify->add_option("--order", order, "part order");
  verify->add_option("--dmax", dmax, "largest dyadic depth for target checks")->capture_default_str();
  add_build_flags(verify, c);

  auto* render = app.add_subcommand("render", "render a graphon as a PGM image");
  render->add_option("--w0", w0_path, "universal-graphon descriptor");
  render->add_option("--w", w_spec, "graphon spec or step-graphon file");
  render->add_option("--n", n, "image side")->default_val(512);
  render->add_option("--out", c.out_path, "PGM path (default: stdout)");

  auto* encode = app.add_subcommand("encode", "print the bit stream of W_F, or decode a descriptor");
  encode->add_option("--wf", wf, "W_F spec or step-graphon file");
  encode->add_option("--w0", w0_path, "universal-graphon descriptor (with --decode)");
  encode->add_flag("--decode", decode, "decode dyadic densities from the built tiles");
  encode->add_option("--dmax", dmax, "largest dyadic depth to decode")->capture_default_str();
  add_build_flags(encode, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

#ifdef _OPENMP
  if (c.threads > 0) omp_set_num_threads(c.threads);
#endif

  try {
    if (*build) {
      const UniversalOptions o = options_of(c, order);
      UniversalDescriptor desc{wf, o, c.exact, std::nullopt};
      const UniversalGraphon w0 = build_from_descriptor(desc);
      desc.bitstream = w0.bits();
      emit(c, out, [&](std::ostream& s) { write_descriptor(s, desc); });
      if (!c.out_path.empty())
        out << "truncation_error_bound " << format_number(w0.truncation_error_bound()) << "\n";
      return 0;
    }
    if (*eval_cmd) {
      if (!w0_path.empty()) {
        const UniversalGraphon w0 = build_from_descriptor(load_descriptor(w0_path));
        out << format_number(eval(w0, x, y)) << "\n";
      } else {
        if (w_spec.empty()) throw ValidationError("give --w0 or --w");
        out << format_number(eval(*resolve_wf(w_spec), x, y)) << "\n";
      }
      return 0;
    }
    if (*density) {
      if (!decorated_path.empty()) {
        const DecoratedGraph dg = load_decorated_graph(decorated_path);
        if (c.exact) {
          const auto w = ExactPartitionedStepGraphon::by_degree(resolve_exact_wf(w_spec));
          out << rational_text(decorated_density(dg, w, roots)) << "\n";
        } else {
          const auto w = PartitionedStepGraphon::by_degree(step_of(w_spec));
          out << format_number(decorated_density(dg, w, roots)) << "\n";
        }
        return 0;
      }
      if (graph_path.empty()) throw ValidationError("give --graph or --decorated");
      const SimpleGraph h = load_graph(graph_path);
      if (c.exact) {
        const ExactStepGraphon w = resolve_exact_wf(w_spec);
        out << rational_text(induced ? induced_density(h, w) : hom_density(h, w)) << "\n";
      } else {
        const StepGraphon w = step_of(w_spec);
        out << format_number(induced ? induced_density(h, w) : hom_density(h, w)) << "\n";
      }
      return 0;
    }
    if (*gamma4) {
      if (c.exact) {
        out << rational_text(gamma4_density<Rational>(resolve_exact_wf(w_spec))) << "\n";
      } else {
        const StepFunction f = std::filesystem::exists(w_spec) ? load_step_function(w_spec)
                                                               : StepFunction(step_of(w_spec));
        out << format_number(gamma4_density(f)) << "\n";
      }
      return 0;
    }
    if (*cut) {
      const StepFunction f = std::filesystem::exists(w_spec) ? load_step_function(w_spec)
                                                             : StepFunction(step_of(w_spec));
      const CutNormResult r = cut_norm(f);
      out << "cut_norm " << format_number(r.value) << "\n";
      out << "exact " << (r.exact ? "true" : "false") << "\n";
      auto cells = [](const CellSet& s) {
        std::string text;
        for (std::size_t i : s) text += (text.empty() ? "" : " ") + std::to_string(i);
        return text;
      };
      out << "witness_S " << cells(r.witness.s) << "\n";
      out << "witness_T " << cells(r.witness.t) << "\n";
      out << "witness_value " << format_number(r.witness.value) << "\n";
      return 0;
    }
    if (*reg) {
      const StepGraphon w = step_of(w_spec);
      const RegularityReport r =
          weak_regular_partition(w, eps, IntervalPartition::dyadic(base_depth), max_iterations);
      out << "certified " << (r.certified ? "true" : "false") << "\n";
      out << "cut " << format_number(r.cut) << (r.cut_exact ? "" : " (lower bound)") << "\n";
      out << "cut_upper " << format_number(r.cut_upper) << "\n";
      out << "iterations " << r.iterations << "\n";
      out << "parts " << r.partition.size() << "\n";
      out << "bounds";
      for (double b : r.partition.bounds()) out << ' ' << format_number(b);
      out << "\n";
      return r.certified ? 0 : 1;
    }
    if (*sample) {
      const SimpleGraph g = sample_w_random(*resolve_wf(w_spec), n, *seed);
      emit(c, out, [&](std::ostream& s) { write_graph(s, g); });
      return 0;
    }
    if (*verify) {
      const UniversalGraphon w0 = build_any(w0_path, wf, c, order);
      std::vector<CheckReport> reports = verify_structure(w0, c.grid);
      const auto add = [&](std::vector<CheckReport> more) {
        reports.insert(reports.end(), more.begin(), more.end());
      };
      reports.push_back(verify_checker_mass(w0, std::min<std::size_t>(c.grid, 2048)));
      add(verify_encoding(w0));
      add(verify_target(w0, std::min(dmax, w0.depth()), std::min<std::size_t>(c.grid, 1024)));
      if (w0.exact_wf()) add(verify_target_exact(w0, std::min(dmax, w0.depth())));
      print_reports(out, reports);
      return any_failed(reports) ? 1 : 0;
    }
    if (*render) {
      std::optional<UniversalGraphon> w0;
      GraphonPtr g;
      if (!w0_path.empty()) {
        w0.emplace(build_from_descriptor(load_descriptor(w0_path)));
      } else {
        if (w_spec.empty()) throw ValidationError("give --w0 or --w");
        g = resolve_wf(w_spec);
      }
      const Grid grid = render_grid(w0 ? static_cast<const Graphon&>(*w0) : *g, n);
      emit(c, out, [&](std::ostream& s) { write_pgm(grid, s); });
      return 0;
    }
    if (*encode) {
      if (decode) {
        const UniversalGraphon w0 = build_any(w0_path, wf, c, order);
        for (unsigned d = 0; d <= std::min(dmax, w0.depth()); ++d)
          for (std::uint64_t s = 0; s < (std::uint64_t{1} << d); ++s)
            for (std::uint64_t t = 0; t < (std::uint64_t{1} << d); ++t) {
              const DyadicIndex idx{d, s, t};
              out << "delta " << d << ' ' << s << ' ' << t << ' ';
              if (w0.exact_wf()) {
                out << rational_text(decode_from_tiles_exact(w0, idx));
              } else {
                out << format_number(decode_from_tiles(w0, idx));
              }
              out << " digits=" << tile_digits(w0, idx) << "\n";
            }
        return 0;
      }
      if (wf.empty()) throw ValidationError("give --wf");
      const BitStream bits = c.exact ? encode_bits(resolve_exact_wf(wf), c.bits)
                                     : encode_bits(*resolve_wf(wf), c.bits, c.grid);
      out << bits.to_string() << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace graphon
