#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "treeopt/bounds.hpp"
#include "treeopt/canonical.hpp"
#include "treeopt/certify.hpp"
#include "treeopt/constructions.hpp"
#include "treeopt/enumeration.hpp"
#include "treeopt/errors.hpp"
#include "treeopt/graph6.hpp"
#include "treeopt/sequences.hpp"

namespace {

using namespace treeopt;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kRefuted = 1, kUsage = 2, kCaps = 3, kFault = 4 };

struct Globals {
  int workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::string format = "text";
  bool caps_override = false;
  bool no_timing = false;
  std::string output;
};

struct GraphInput {
  std::string g6;
  std::string edge_file;

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_option("--g6", g6, "graph in graph6");
    auto* b = cmd->add_option("--edges", edge_file, "file with an edge list (\"n m\" then \"u v\" lines)");
    a->excludes(b);
  }

  Graph load() const {
    if (!edge_file.empty()) {
      std::ifstream in(edge_file);
      if (!in) throw ArgumentError("cannot open " + edge_file);
      std::stringstream ss;
      ss << in.rdbuf();
      return parse_edge_list(ss.str());
    }
    if (g6.empty()) throw ArgumentError("one of --g6 or --edges is required");
    return from_graph6(g6);
  }
};

RunConfig config_of(const Globals& g) {
  RunConfig cfg;
  cfg.workers = g.workers;
  cfg.caps.override_caps = g.caps_override;
  cfg.output_path = g.output;
  cfg.format = g.format == "structured" ? OutputFormat::Structured : OutputFormat::Text;
  return cfg;
}

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw ArgumentError("cannot write " + g.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

bool structured(const Globals& g) { return g.format == "structured"; }

json envelope(const char* command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

std::string seq_text(const std::vector<BigInt>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + values[i].get_str();
  return s;
}

json seq_json(const std::vector<BigInt>& values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(v.get_str());
  return a;
}

int emit_certificate(const Globals& g, const Certificate& cert) {
  emit(g, structured(g) ? to_structured(cert, !g.no_timing) : to_text(cert));
  return exit_code(cert.verdict);
}

int emit_graph(const Globals& g, const char* command, const Graph& graph) {
  if (structured(g)) {
    json j = envelope(command);
    j["graph6"] = to_graph6(graph);
    j["summary"] = summarize(graph);
    emit(g, j.dump(2));
  } else {
    emit(g, to_graph6(graph) + "\n" + summarize(graph));
  }
  return kOk;
}

std::string bound_text(const BoundReport& r) {
  std::ostringstream os;
  os.precision(12);
  os << "bound=" << static_cast<double>(r.bound_value) << " t(complement)=" << r.exact_t.get_str()
     << " slack=" << static_cast<double>(r.slack) << " equality=" << (r.equality_flag ? "yes" : "no")
     << " complement_connected=" << (r.complement_connected ? "yes" : "no") << " c=" << r.c_used;
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spanning-tree and trace-sequence toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--workers", globals.workers, "worker threads")->envname("TREEOPT_WORKERS")->check(CLI::PositiveNumber);
  app.add_option("--format", globals.format, "output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--caps-override", globals.caps_override, "raise enumeration caps to their ceilings");
  app.add_flag("--no-timing", globals.no_timing, "omit elapsed time and version from structured certificates");
  app.add_option("--output", globals.output, "write the result to a file instead of stdout");

  std::function<int()> action;

  GraphInput count_in;
  auto* count = app.add_subcommand("count", "exact spanning-tree count");
  count_in.attach(count);
  count->callback([&] {
    action = [&] {
      const Graph g = count_in.load();
      const BigInt t = spanning_tree_count(g);
      const BigInt t2 = tree_count_via_complement(g);
      if (t != t2) throw InternalFault("cofactor and complement evaluations disagree");
      if (structured(globals)) {
        json j = envelope("count");
        j["graph6"] = to_graph6(g);
        j["t"] = t.get_str();
        emit(globals, j.dump(2));
      } else {
        emit(globals, t.get_str());
      }
      return kOk;
    };
  });

  GraphInput seq_in;
  std::string seq_kind = "lap";
  int seq_k = 0;
  auto* seq = app.add_subcommand("seq", "Laplacian or adjacency trace sequence");
  seq_in.attach(seq);
  seq->add_option("--kind", seq_kind)->check(CLI::IsMember({"lap", "adj"}));
  seq->add_option("--k", seq_k, "number of terms")->required()->check(CLI::PositiveNumber);
  seq->callback([&] {
    action = [&] {
      const Graph g = seq_in.load();
      const SequenceKind kind = seq_kind == "lap" ? SequenceKind::Laplacian : SequenceKind::Adjacency;
      const TraceSequence s = trace_sequence(g, kind, seq_k);
      if (structured(globals)) {
        json j = envelope("seq");
        j["graph6"] = to_graph6(g);
        j["kind"] = to_string(kind);
        j["values"] = seq_json(s.values);
        emit(globals, j.dump(2));
      } else {
        emit(globals, seq_text(s.values));
      }
      return kOk;
    };
  });

  GraphInput gaps_in;
  int gaps_k = 0;
  auto* gaps = app.add_subcommand("gaps", "gap sequence l_k - sum d(d+1)^(k-1)");
  gaps_in.attach(gaps);
  gaps->add_option("--k", gaps_k, "number of terms")->required()->check(CLI::PositiveNumber);
  gaps->callback([&] {
    action = [&] {
      const Graph g = gaps_in.load();
      const GapSequence s = gap_sequence(g, gaps_k);
      if (structured(globals)) {
        json j = envelope("gaps");
        j["graph6"] = to_graph6(g);
        j["values"] = seq_json(s.values);
        emit(globals, j.dump(2));
      } else {
        emit(globals, seq_text(s.values));
      }
      return kOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "certify a candidate by enumeration");
  verify->require_subcommand(1);
  struct RegularArgs {
    GraphInput in;
    int n = 0;
    int d = 0;
  };
  RegularArgs tmin;
  RegularArgs lmin;
  for (auto [name, args, ltrace] : {std::tuple{"trace-min", &tmin, false}, std::tuple{"ltrace-min", &lmin, true}}) {
    auto* sub = verify->add_subcommand(name, ltrace ? "Laplacian trace-minimality in R_d(n)"
                                                    : "adjacency trace-minimality in R_d(n)");
    args->in.attach(sub);
    sub->add_option("--n", args->n)->required();
    sub->add_option("--d", args->d)->required();
    sub->callback([&, args, ltrace] {
      action = [&, args, ltrace] {
        const Graph g = args->in.load();
        const RunConfig cfg = config_of(globals);
        return emit_certificate(globals, ltrace ? verify_l_trace_minimal(g, args->n, args->d, cfg)
                                                : verify_trace_minimal(g, args->n, args->d, cfg));
      };
    });
  }
  GraphInput topt_in;
  int topt_n = 0;
  int topt_m = 0;
  auto* topt = verify->add_subcommand("t-optimal", "maximum spanning-tree count in S_{n,m}");
  topt_in.attach(topt);
  topt->add_option("--n", topt_n)->required();
  topt->add_option("--m", topt_m)->required();
  topt->callback([&] {
    action = [&] {
      return emit_certificate(globals, verify_t_optimal(topt_in.load(), topt_n, topt_m, config_of(globals)));
    };
  });

  int dual_n = 0;
  int dual_d = 0;
  auto* dual = app.add_subcommand("duality", "L-trace-minimal set of R_d(n) against complements of trace-minimal graphs");
  dual->add_option("--n", dual_n)->required();
  dual->add_option("--d", dual_d)->required();
  dual->callback([&] {
    action = [&] { return emit_certificate(globals, check_duality(dual_n, dual_d, config_of(globals))); };
  });

  auto* construct = app.add_subcommand("construct", "build a named graph");
  construct->require_subcommand(1);
  int h_n = 0;
  auto* c_h = construct->add_subcommand("h", "the H_n family, (n-5)-regular on n vertices");
  c_h->add_option("--n", h_n)->required();
  c_h->callback([&] { action = [&] { return emit_graph(globals, "construct h", h_family(h_n)); }; });
  GraphInput g0_in;
  int g0_d = 0;
  int g0_p = 0;
  int g0_q = 0;
  auto* c_g0 = construct->add_subcommand("g0pq", "G0 plus p copies of K_{d+1} and q copies of K_d");
  g0_in.attach(c_g0);
  c_g0->add_option("--d", g0_d)->required();
  c_g0->add_option("--p", g0_p)->required()->check(CLI::NonNegativeNumber);
  c_g0->add_option("--q", g0_q)->required()->check(CLI::NonNegativeNumber);
  c_g0->callback([&] {
    action = [&] { return emit_graph(globals, "construct g0pq", extend_g0(g0_in.load(), g0_d, g0_p, g0_q)); };
  });
  GraphInput jp_in;
  int jp_k = 0;
  auto* c_jp = construct->add_subcommand("join-power", "join of k disjoint copies");
  jp_in.attach(c_jp);
  c_jp->add_option("--k", jp_k)->required();
  c_jp->callback([&] {
    action = [&] { return emit_graph(globals, "construct join-power", join_power(jp_in.load(), jp_k)); };
  });
  GraphInput co_in;
  auto* c_co = construct->add_subcommand("complement", "complement graph");
  co_in.attach(c_co);
  c_co->callback([&] {
    action = [&] { return emit_graph(globals, "construct complement", complement(co_in.load())); };
  });

  std::string en_class;
  int en_n = 0;
  int en_d = -1;
  int en_m = -1;
  std::string en_out;
  auto* en = app.add_subcommand("enumerate", "list a class up to isomorphism, one graph6 per line");
  en->add_option("--class", en_class)->required()->check(CLI::IsMember({"r", "s"}));
  en->add_option("--n", en_n)->required();
  en->add_option("--d", en_d);
  en->add_option("--m", en_m);
  en->add_option("--out", en_out, "spool to a file; resumable through <out>.ckpt");
  en->callback([&] {
    action = [&] {
      const RunConfig cfg = config_of(globals);
      GraphClassSpec spec;
      if (en_class == "r") {
        if (en_d < 0) throw ArgumentError("--class r needs --d");
        spec = GraphClassSpec::regular(en_n, en_d, cfg.caps);
      } else {
        if (en_m < 0) throw ArgumentError("--class s needs --m");
        spec = GraphClassSpec::edge_count(en_n, en_m, cfg.caps);
      }
      const EnumOptions opts{cfg.caps, cfg.workers};
      if (!en_out.empty()) {
        const SpoolResult r = spool_class(spec, en_out, en_out + ".ckpt", opts);
        std::ostringstream os;
        if (structured(globals)) {
          json j = envelope("enumerate");
          j["class"] = spec.describe();
          j["class_size"] = std::to_string(r.class_size);
          j["units_total"] = std::to_string(r.units_total);
          j["units_resumed"] = std::to_string(r.units_resumed);
          j["parity_warning"] = r.parity_warning;
          j["path"] = en_out;
          emit(globals, j.dump(2));
        } else {
          os << spec.describe() << ": " << r.class_size << " classes written to " << en_out << " (" << r.units_resumed
             << "/" << r.units_total << " units resumed)";
          if (r.parity_warning) os << "\nwarning: n*d is odd, the class is empty";
          emit(globals, os.str());
        }
        return kOk;
      }
      const IsoClassStream s = en_class == "r" ? enumerate_regular(en_n, en_d, opts) : enumerate_by_edges(en_n, en_m, opts);
      if (s.parity_warning) std::cerr << "warning: n*d is odd, the class is empty\n";
      if (structured(globals)) {
        json j = envelope("enumerate");
        j["class"] = spec.describe();
        j["class_size"] = std::to_string(s.size());
        j["parity_warning"] = s.parity_warning;
        j["graphs"] = s.codes;
        emit(globals, j.dump(2));
      } else {
        std::string text;
        for (const auto& c : s.codes) text += c + "\n";
        emit(globals, text);
      }
      return kOk;
    };
  });

  GraphInput bound_in;
  int bound_c = 3;
  auto* bound = app.add_subcommand("bound", "upper bound on t(complement(G)) with gap terms up to c");
  bound_in.attach(bound);
  bound->add_option("--c", bound_c, "gap terms included")->check(CLI::PositiveNumber);
  bound->callback([&] {
    action = [&] {
      const Graph g = bound_in.load();
      const BoundReport r = improved_bound(g, bound_c);
      if (structured(globals)) {
        json j = envelope("bound");
        j["graph6"] = to_graph6(g);
        j["c"] = r.c_used;
        j["bound"] = static_cast<double>(r.bound_value);
        j["log_bound"] = static_cast<double>(r.log_bound);
        j["t_complement"] = r.exact_t.get_str();
        j["slack"] = static_cast<double>(r.slack);
        j["equality"] = r.equality_flag;
        j["complement_connected"] = r.complement_connected;
        j["holds"] = r.holds();
        emit(globals, j.dump(2));
      } else {
        emit(globals, bound_text(r));
      }
      return r.holds() ? kOk : kFault;
    };
  });

  int rep_n = 0;
  int rep_m = 0;
  auto* rep = app.add_subcommand("report", "rank S_{n,m} by spanning-tree count");
  rep->add_option("--n", rep_n)->required();
  rep->add_option("--m", rep_m)->required();
  rep->callback([&] {
    action = [&] {
      const ClassReport r = report_class(rep_n, rep_m, config_of(globals));
      emit(globals, structured(globals) ? to_structured(r, !globals.no_timing) : to_text(r));
      return kOk;
    };
  });

  int th_order = 0;
  int th_d = 0;
  int th_c = 0;
  auto* th = app.add_subcommand("threshold", "vertex count beyond which the family argument applies");
  th->add_option("--g0-order", th_order)->required()->check(CLI::PositiveNumber);
  th->add_option("--d", th_d)->required()->check(CLI::PositiveNumber);
  th->add_option("--c", th_c)->required()->check(CLI::PositiveNumber);
  th->callback([&] {
    action = [&] {
      const BigInt v = n0_threshold(th_order, th_d, th_c);
      if (structured(globals)) {
        json j = envelope("threshold");
        j["n0"] = v.get_str();
        emit(globals, j.dump(2));
      } else {
        emit(globals, v.get_str());
      }
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const CapsRefusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kCaps;
  } catch (const InternalFault& e) {
    std::cerr << "internal consistency fault: " << e.what() << "\n";
    return kFault;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal consistency fault: " << e.what() << "\n";
    return kFault;
  }
}
