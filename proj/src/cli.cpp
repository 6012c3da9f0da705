#include "ringgraph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "ringgraph/cache.hpp"
#include "ringgraph/descriptor.hpp"
#include "ringgraph/errors.hpp"
#include "ringgraph/graph_io.hpp"
#include "ringgraph/lambda.hpp"
#include "ringgraph/verify.hpp"

namespace ringgraph::cli {
namespace {

struct ComputeOptions {
  std::string ring;
  std::string kind = "lambda1";
  std::string format;
  std::string output;
  std::uint64_t max_order = kDefaultMaxOrder;
  unsigned threads = 0;
  bool no_cache = false;
};

struct VerifyOptions {
  std::string suite;
  bool structure = false;
  std::uint64_t max_order = kDefaultMaxOrder;
  std::string json;
  unsigned threads = 0;
};

struct InfoOptions {
  std::string ring;
  std::uint64_t max_order = kDefaultMaxOrder;
};

struct RatioOptions {
  std::uint32_t p = 2;
  std::uint32_t max_n = 12;
  std::uint32_t brute_max_n = 3;
};

std::string weights_text(std::vector<std::uint64_t> weights) {
  std::sort(weights.rbegin(), weights.rend());
  std::string out = "[";
  for (std::size_t i = 0; i < weights.size(); ++i) out += (i ? "," : "") + std::to_string(weights[i]);
  return out + "]";
}

void write_document(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << text;
  if (!file) throw std::runtime_error("cannot write " + path);
}

int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
  const RingDescriptor desc = parse_descriptor(opt.ring);
  const bool emit = !opt.format.empty() || !opt.output.empty();
  const std::string format = opt.format.empty() ? "json" : opt.format;
  // The summary must not interleave with a document written to stdout.
  std::ostream& summary = (emit && (opt.output.empty() || opt.output == "-")) ? err : out;

  if (opt.kind == "gamma") {
    const RingPtr ring = build_ring(desc, opt.max_order);
    const LoopGraph gamma = commuting_graph(*ring);
    if (emit) write_document(format == "dot" ? to_dot(gamma) : to_json(gamma).dump() + "\n", opt.output, out);
    summary << "ring=" << desc.canonical() << " kind=gamma vertices=" << gamma.size() << " edges=" << gamma.edge_count()
            << "\n";
    return kOk;
  }

  const bool unital = opt.kind == "lambda1";
  const std::string key = cache_key(desc.canonical(), unital);
  const ResultCache cache(ResultCache::default_dir());
  std::optional<std::string> json_text;
  if (!opt.no_cache) json_text = cache.load(key);
  const bool hit = json_text.has_value();
  if (!hit) {
    const RingPtr ring = build_ring(desc, opt.max_order);
    const CompressedGraph cg = compressed_graph(*ring, unital, opt.threads);
    json_text = to_json(cg.graph).dump() + "\n";
    if (!opt.no_cache) cache.store(key, *json_text);
  }
  const WeightedLoopGraph graph = weighted_from_json(nlohmann::json::parse(*json_text));
  if (emit) write_document(format == "dot" ? to_dot(graph.graph, graph.weights) : *json_text, opt.output, out);
  summary << "ring=" << desc.canonical() << " kind=" << opt.kind << " " << (unital ? "v1=" : "v=") << graph.graph.size()
          << " weights=" << weights_text(graph.weights) << " cache=" << (opt.no_cache ? "off" : hit ? "hit" : "miss")
          << "\n";
  return kOk;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const auto cases = verify::suite_cases(opt.suite, opt.max_order);
  const auto report = verify::run_verification(cases, opt.structure, opt.max_order, opt.threads);
  out << report.to_table();
  if (!opt.json.empty()) write_document(report.to_json().dump(2) + "\n", opt.json, out);
  return report.pass() ? kOk : kFailure;
}

int cmd_info(const InfoOptions& opt, std::ostream& out) {
  const RingDescriptor desc = parse_descriptor(opt.ring);
  const RingPtr ring = build_ring(desc, opt.max_order);
  out << "ring=" << desc.canonical() << " order=" << ring->order() << " characteristic=" << ring->characteristic()
      << " unital=" << (ring->is_unital() ? "yes" : "no") << " center=" << center(*ring).size() << "\n";
  return kOk;
}

int cmd_ratios(const RatioOptions& opt, std::ostream& out) {
  out << "# v1(M2(GF(p^n))) / (sigma(n) p^(2n) / 2); diagnostic only\n";
  out << std::left << std::setw(4) << "n" << std::setw(14) << "v1(formula)" << std::setw(12) << "ratio"
      << "v1(computed)\n";
  for (const auto& row : verify::asymptotic_ratios(opt.p, opt.max_n)) {
    out << std::left << std::setw(4) << row.n << std::setw(14) << row.v1 << std::setw(12) << std::setprecision(6)
        << row.ratio;
    if (row.n <= opt.brute_max_n) {
      RingDescriptor d;
      d.kind = RingDescriptor::Kind::kMatrix2;
      d.p = opt.p;
      d.n = row.n;
      out << compressed_graph(*build_ring(d, 1u << 20), true).vertex_count();
    } else {
      out << "-";
    }
    out << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compressed commuting graphs of finite rings", "ringgraph"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "Build a ring and export Lambda, Lambda^1 or Gamma");
  c->add_option("--ring", compute.ring, "Ring descriptor, e.g. m2:gf:2^1")->required();
  c->add_option("--kind", compute.kind, "lambda | lambda1 | gamma")
      ->check(CLI::IsMember({"lambda", "lambda1", "gamma"}));
  c->add_option("--format", compute.format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
  c->add_option("--output,-o", compute.output, "Output path (default stdout)");
  c->add_option("--max-order", compute.max_order, "Enumeration limit");
  c->add_option("--threads", compute.threads, "Worker threads (0 = hardware)");
  c->add_flag("--no-cache", compute.no_cache, "Bypass the result cache");

  VerifyOptions verify_opt;
  auto* v = app.add_subcommand("verify", "Compare closed-form predictions with brute force");
  v->add_option("suite", verify_opt.suite, "table1 | fields | products | polyquot | m2 | all")->required();
  v->add_flag("--structure", verify_opt.structure, "Also check graph isomorphism");
  v->add_option("--max-order", verify_opt.max_order, "Enumeration limit");
  v->add_option("--json", verify_opt.json, "Write the JSON report to this path ('-' for stdout)");
  v->add_option("--threads", verify_opt.threads, "Worker threads (0 = hardware)");

  InfoOptions info;
  auto* i = app.add_subcommand("info", "Print order, characteristic, unitality and center size");
  i->add_option("--ring", info.ring, "Ring descriptor")->required();
  i->add_option("--max-order", info.max_order, "Enumeration limit");

  RatioOptions ratios;
  auto* r = app.add_subcommand("ratios", "Diagnostic: finite-n growth ratio of v1(M2(GF(p^n)))");
  r->add_option("--p", ratios.p, "Prime");
  r->add_option("--max-n", ratios.max_n, "Largest n from the closed form");
  r->add_option("--brute-max-n", ratios.brute_max_n, "Largest n also computed by enumeration");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out, err);
    if (v->parsed()) return cmd_verify(verify_opt, out);
    if (i->parsed()) return cmd_info(info, out);
    if (r->parsed()) return cmd_ratios(ratios, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kSizeLimit;
  } catch (const NotUnitalError& e) {
    err << "error: " << e.what() << "\n";
    return kNotUnital;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace ringgraph::cli
