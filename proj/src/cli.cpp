#include "ehcert/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "ehcert/ceh.hpp"
#include "ehcert/errors.hpp"
#include "ehcert/extremal.hpp"
#include "ehcert/io.hpp"
#include "ehcert/normalize.hpp"
#include "ehcert/oracle.hpp"
#include "ehcert/seh.hpp"

namespace ehcert::cli {
namespace {

struct Instance {
  FileKind kind = FileKind::graph;
  std::optional<IntervalFamily> intervals;
  std::optional<SubtreeFamily> subtrees;
  std::optional<GraphFile> graph;
  std::optional<CotreeFile> cotree;
};

Instance load(const std::string& path) {
  std::string text = read_file(path);
  Instance in;
  in.kind = detect_kind(text);
  switch (in.kind) {
    case FileKind::intervals:
      in.intervals = parse_intervals(text);
      break;
    case FileKind::subtrees:
      in.subtrees = parse_subtrees(text);
      break;
    case FileKind::graph:
      in.graph = parse_graph(text);
      break;
    case FileKind::cotree:
      in.cotree = parse_cotree_file(text);
      break;
    case FileKind::certificate:
      throw InputError("'" + path + "' holds a certificate, not an instance");
  }
  return in;
}

void expect(const Instance& in, FileKind kind, const std::string& cls) {
  if (in.kind != kind) throw InputError("input file does not match --class " + cls);
}

void emit(const std::string& output, std::ostream& out, const std::string& text) {
  if (output.empty()) {
    out << text;
  } else {
    write_file(output, text);
  }
}

std::string join(const std::vector<Id>& ids) {
  if (ids.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
  return os.str();
}

// Graph view of any instance plus the id carried by each vertex.
struct GraphView {
  Graph graph;
  std::vector<Id> ids;
  std::optional<std::vector<int>> parts;
};

template <class Family>
GraphView family_view(const Family& fam) {
  GraphView view{intersection_graph(fam), {}, std::nullopt};
  std::vector<int> parts;
  for (const auto& m : fam.members()) {
    view.ids.push_back(m.id);
    if (m.part) parts.push_back(*m.part);
  }
  if (fam.has_parts()) view.parts = std::move(parts);
  return view;
}

GraphView labelled_view(Graph g, std::vector<Id> ids, const std::optional<Partition>& partition) {
  GraphView view{std::move(g), std::move(ids), std::nullopt};
  if (partition) {
    std::vector<int> parts;
    for (Id id : view.ids) parts.push_back(*partition->part_of(id));
    view.parts = std::move(parts);
  }
  return view;
}

GraphView graph_view(const Instance& in) {
  switch (in.kind) {
    case FileKind::intervals:
      return family_view(*in.intervals);
    case FileKind::subtrees:
      return family_view(*in.subtrees);
    case FileKind::graph: {
      std::vector<Id> ids(in.graph->graph.size());
      for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<Id>(i);
      return labelled_view(in.graph->graph, std::move(ids), in.graph->partition);
    }
    case FileKind::cotree:
      return labelled_view(cotree_to_graph(in.cotree->cotree), in.cotree->cotree.leaves(), in.cotree->partition);
    case FileKind::certificate:
      break;
  }
  throw InputError("not an instance");
}

std::optional<Partition> partition_of(const Instance& in) {
  switch (in.kind) {
    case FileKind::intervals:
      return Partition::from_labels(*in.intervals);
    case FileKind::subtrees:
      return Partition::from_labels(*in.subtrees);
    case FileKind::graph:
      return in.graph->partition;
    case FileKind::cotree:
      return in.cotree->partition;
    case FileKind::certificate:
      break;
  }
  return std::nullopt;
}

std::vector<Id> parse_id_list(const std::string& text) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream is(spaced);
  std::vector<Id> ids;
  for (std::string tok; is >> tok;) {
    try {
      std::size_t used = 0;
      ids.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw InputError("--set: '" + tok + "' is not an id");
    }
  }
  return ids;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificate-producing bi-clique finders for interval, chordal and cograph instances"};
  app.require_subcommand(1);

  std::string cls, input, output, cert_path, which, set_text;
  bool emit_trace = false, allow_unbalanced = false, use_partition = false;
  int k = 0, n = 0, cap = kDefaultOracleCap;
  std::optional<int> a_opt, b_opt;
  std::uint64_t seed = 0;
  std::size_t min_side = 0;

  auto* normalize = app.add_subcommand("normalize", "normalize a subtree or interval representation");
  normalize->add_option("--class", cls)->required()->check(CLI::IsMember({"subtree", "interval"}));
  normalize->add_option("--input", input)->required();
  normalize->add_option("--output", output);

  auto* seh = app.add_subcommand("seh", "bi-clique in G or its complement");
  seh->add_option("--class", cls)->required()->check(CLI::IsMember({"interval", "cograph", "chordal"}));
  seh->add_option("--input", input)->required();
  seh->add_option("--output", output);
  seh->add_flag("--emit-trace", emit_trace);

  auto* ceh = app.add_subcommand("ceh", "bi-clique across a two-part partition");
  ceh->add_option("--class", cls)->required()->check(CLI::IsMember({"interval", "cograph", "tk", "tk-weak"}));
  ceh->add_option("--input", input)->required();
  ceh->add_option("--output", output);
  ceh->add_flag("--allow-unbalanced", allow_unbalanced);
  ceh->add_flag("--emit-trace", emit_trace);

  auto* gen = app.add_subcommand("gen", "write an extremal or random instance");
  gen->add_option("--which", which)
      ->required()
      ->check(CLI::IsMember(
          {"seh-interval", "seh-cograph", "seh-chordal", "ceh-interval", "ceh-cograph", "lower-bound"}));
  gen->add_option("--k", k)->required();
  gen->add_option("--n", n);
  gen->add_option("--seed", seed);
  gen->add_option("--a", a_opt);
  gen->add_option("--b", b_opt);
  gen->add_option("--output", output);

  auto* oracle = app.add_subcommand("oracle", "exhaustive maximum bi-clique");
  oracle->add_option("--input", input)->required();
  oracle->add_flag("--partition", use_partition);
  oracle->add_option("--cap", cap);

  auto* verify = app.add_subcommand("verify", "check a certificate against an instance");
  verify->add_option("--input", input)->required();
  verify->add_option("--cert", cert_path)->required();
  verify->add_option("--min-side", min_side);
  verify->add_flag("--partition", use_partition);

  auto* exi = app.add_subcommand("exi", "expected number of K_{a,b} in a random bipartite graph");
  exi->add_option("--k", k)->required();
  exi->add_option("--n", n)->required();
  exi->add_option("--a", a_opt);
  exi->add_option("--b", b_opt);

  auto* cograph = app.add_subcommand("cograph", "cotree utilities");
  cograph->require_subcommand(1);
  auto* recognize = cograph->add_subcommand("recognize", "cotree of a graph, or an induced P4");
  recognize->add_option("--input", input)->required();
  auto* conform = cograph->add_subcommand("conform", "conforming subset for a vertex set");
  conform->add_option("--input", input)->required();
  conform->add_option("--set", set_text)->required();
  conform->add_flag("--emit-trace", emit_trace);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (normalize->parsed()) {
      Instance in = load(input);
      if (cls == "subtree") {
        expect(in, FileKind::subtrees, cls);
        emit(output, out, write_subtrees(normalize_subtrees(*in.subtrees)));
      } else {
        expect(in, FileKind::intervals, cls);
        emit(output, out, write_intervals(perturb_intervals(*in.intervals)));
      }
    } else if (seh->parsed()) {
      Instance in = load(input);
      std::ostringstream os;
      BicliqueCertificate cert;
      if (cls == "interval") {
        expect(in, FileKind::intervals, cls);
        cert = seh_interval(*in.intervals);
        if (emit_trace) os << "# n " << in.intervals->size() << "\n# guarantee " << seh_interval_guarantee(in.intervals->size()) << "\n";
      } else if (cls == "cograph") {
        expect(in, FileKind::cotree, cls);
        cert = seh_cograph(in.cotree->cotree);
        const auto leaves = in.cotree->cotree.leaf_count();
        if (emit_trace) os << "# n " << leaves << "\n# guarantee " << seh_cograph_guarantee(leaves) << "\n";
      } else {
        expect(in, FileKind::subtrees, cls);
        ChordalTrace trace;
        cert = seh_chordal(*in.subtrees, &trace);
        if (emit_trace) os << trace.table() << "# guarantee " << seh_chordal_guarantee(trace.n) << "\n";
      }
      os << write_certificate(cert);
      emit(output, out, os.str());
    } else if (ceh->parsed()) {
      Instance in = load(input);
      std::ostringstream os;
      BicliqueCertificate cert;
      if (cls == "interval") {
        expect(in, FileKind::intervals, cls);
        int which_case = 0;
        cert = ceh_interval(*in.intervals, allow_unbalanced, &which_case);
        if (emit_trace) os << "# case " << which_case << "\n";
      } else if (cls == "cograph") {
        expect(in, FileKind::cotree, cls);
        if (!in.cotree->partition) throw InputError("cotree file has no P lines");
        cert = ceh_cograph(in.cotree->cotree, *in.cotree->partition, allow_unbalanced);
      } else {
        expect(in, FileKind::subtrees, cls);
        TkTrace trace;
        cert = cls == "tk" ? ceh_tk(*in.subtrees, allow_unbalanced, &trace)
                           : ceh_tk_weak(*in.subtrees, allow_unbalanced, &trace);
        if (emit_trace) os << trace.table();
      }
      os << write_certificate(cert);
      emit(output, out, os.str());
    } else if (gen->parsed()) {
      std::ostringstream os;
      os << "# gen " << which << " k=" << k << "\n";
      if (which == "seh-interval") {
        os << write_intervals(gen_seh_interval(k));
      } else if (which == "seh-cograph") {
        os << write_cotree_file(gen_seh_cograph(k));
      } else if (which == "seh-chordal") {
        os << write_subtrees(gen_seh_chordal(k));
      } else if (which == "ceh-interval") {
        os << write_intervals(gen_ceh_interval(k));
      } else if (which == "ceh-cograph") {
        auto inst = gen_ceh_cograph(k);
        os << write_cotree_file(inst.cotree, &inst.partition);
      } else {
        if (n == 0) n = k;
        auto inst = gen_lower_bound(k, n, seed, a_opt, b_opt);
        os << "# prng " << kPrngName << " seed " << seed << "\n# n " << n << " a " << inst.a << " b " << inst.b
           << "\n"
           << write_subtrees(inst.family);
      }
      emit(output, out, os.str());
    } else if (oracle->parsed()) {
      Instance in = load(input);
      GraphView view = graph_view(in);
      OracleResult res;
      if (use_partition) {
        if (!view.parts) throw InputError("--partition needs part labels in the input");
        res = max_colorful_biclique(view.graph, *view.parts, cap);
      } else {
        res = max_balanced_biclique(view.graph, cap);
      }
      auto to_ids = [&](const std::vector<Id>& vs) {
        std::vector<Id> ids;
        for (Id v : vs) ids.push_back(view.ids[static_cast<std::size_t>(v)]);
        return ids;
      };
      out << res.size << ' ' << to_string(res.cert.kind) << ' ' << join(to_ids(res.cert.side_a)) << ' '
          << join(to_ids(res.cert.side_b)) << '\n';
    } else if (verify->parsed()) {
      Instance in = load(input);
      BicliqueCertificate cert = parse_certificate(read_file(cert_path));
      std::optional<Partition> partition;
      if (use_partition) {
        partition = partition_of(in);
        if (!partition) throw InputError("--partition needs part labels in the input");
      }
      const Partition* p = partition ? &*partition : nullptr;
      VerifyReport report;
      switch (in.kind) {
        case FileKind::intervals:
          report = verify_certificate(*in.intervals, cert, min_side, p);
          break;
        case FileKind::subtrees:
          report = verify_certificate(*in.subtrees, cert, min_side, p);
          break;
        case FileKind::graph:
          report = verify_certificate(in.graph->graph, cert, min_side, p);
          break;
        case FileKind::cotree:
          report = verify_certificate(in.cotree->cotree, cert, min_side, p);
          break;
        case FileKind::certificate:
          break;
      }
      if (!report.valid) {
        out << "invalid: " << report.reason << '\n';
        return kExitInvalid;
      }
      out << "valid\n";
    } else if (exi->parsed()) {
      auto e = expected_kab(k, n, a_opt, b_opt);
      out << e.k << ' ' << e.n << ' ' << e.a << ' ' << e.b << ' ' << e.str() << '\n';
    } else if (recognize->parsed()) {
      Instance in = load(input);
      expect(in, FileKind::graph, "graph");
      auto result = recognize_cograph(in.graph->graph);
      if (auto* ct = std::get_if<Cotree>(&result)) {
        out << ct->str() << '\n';
      } else {
        const auto& p4 = std::get<P4Witness>(result).path;
        out << "P4 " << p4[0] << ' ' << p4[1] << ' ' << p4[2] << ' ' << p4[3] << '\n';
      }
    } else if (conform->parsed()) {
      Instance in = load(input);
      expect(in, FileKind::cotree, "cotree");
      auto result = conforming_subset(in.cotree->cotree, parse_id_list(set_text));
      if (emit_trace) {
        for (const auto& step : result.steps) out << "# step |U∩G| " << step.u_in_g << " |U∩H| " << step.u_in_h << '\n';
      }
      out << "W:";
      for (Id id : result.w) out << ' ' << id;
      out << '\n';
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace ehcert::cli
