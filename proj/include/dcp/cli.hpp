#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcp/all.hpp"

namespace dcp {

namespace detail {

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(1, "cannot open '" + path + "'");
  return read_graph(in);
}

inline std::string basename_of(const std::string& path) {
  size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

inline std::string family_json(const Graph& g, const DcpFamily& fam) {
  std::ostringstream os;
  os << "{\"n\":" << fam.n << ",\"m\":" << g.edge_count() << ",\"delta\":" << fam.delta
     << ",\"polys\":[";
  for (size_t d = 0; d < fam.polys.size(); ++d) {
    if (d) os << ',';
    os << fam.polys[d].to_json("k");
  }
  os << "]}";
  return os.str();
}

inline void verify_engines(const Graph& g, const DcpFamily& fam, std::ostream& err) {
  for (int d = 0; d <= fam.delta; ++d) {
    IntPoly reference = chi_d_contraction(g, d);
    if (reference != fam.chi(d))
      throw std::logic_error("verification failed: contraction formula disagrees at d=" +
                             std::to_string(d));
    if (g.vertex_count() <= caps::effective(caps::kOracleVerticesMax)) {
      IntPoly oracle = interpolate_from_counts(g, d);
      if (oracle != fam.chi(d))
        throw std::logic_error("verification failed: coloring oracle disagrees at d=" +
                               std::to_string(d));
    }
  }
  err << "verified against contraction formula"
      << (g.vertex_count() <= caps::effective(caps::kOracleVerticesMax) ? " and coloring oracle"
                                                                        : "")
      << '\n';
}

}  // namespace detail

// All subcommands; returns the process exit code (0 success, 1 usage,
// 2 parse error, 3 resource limit).
inline int cli_main(const std::vector<std::string>& args, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  CLI::App app{"exact defective chromatic polynomial toolkit"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "defective chromatic polynomial(s) of a graph");
  std::string compute_input;
  int compute_d = -1;
  bool compute_all = false, compute_verify = false;
  compute->add_option("--input", compute_input, "edge-list or graph6 file")->required();
  compute->add_option("--d", compute_d, "single defect bound");
  compute->add_flag("--all-d", compute_all, "whole family up to stabilization");
  compute->add_flag("--verify", compute_verify, "cross-check engines");

  auto* family = app.add_subcommand("family-build", "emit a named example tree");
  family->alias("family");
  std::string family_kind, family_emit = "edges";
  int family_param = 0, family_member = 1;
  family->add_option("--kind", family_kind, "C|X|Y|Xtilde|Ytilde|T1..T6|left_zagreb_caterpillar|right_zagreb_caterpillar|n10_pair|n11_pair_shown")
      ->required();
  family->add_option("--param", family_param, "a or b for X/Y/Xtilde/Ytilde");
  family->add_option("--member", family_member, "1 or 2 for the pair kinds");
  family->add_option("--emit", family_emit, "edges|graph6")->check(CLI::IsMember({"edges", "graph6"}));

  auto* census = app.add_subcommand("census", "DCP-equivalence census over all trees of an order");
  int census_order = 0, census_threads = 1;
  std::string census_format = "json";
  census->add_option("--order", census_order, "tree order")->required();
  census->add_option("--threads", census_threads, "worker count for family computation");
  census->add_option("--format", census_format, "json|text")->check(CLI::IsMember({"json", "text"}));

  auto* compare = app.add_subcommand("compare", "invariant comparison row for two graphs");
  std::vector<std::string> compare_files;
  std::string compare_format = "text";
  compare->add_option("files", compare_files, "two graph files")->expected(2);
  compare->add_option("--format", compare_format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* gen = app.add_subcommand("gen-trees", "all nonisomorphic trees of an order, graph6");
  int gen_order = 0;
  gen->add_option("--order", gen_order, "tree order")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 takes a reversed vector
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (compute->parsed()) {
      if (compute_all == (compute_d >= 0)) {
        err << "usage error: pass exactly one of --d or --all-d\n";
        return 1;
      }
      Graph g = detail::read_graph_file(compute_input);
      if (compute_all) {
        DcpFamily fam = dcp_family(g);
        if (compute_verify) detail::verify_engines(g, fam, err);
        out << detail::family_json(g, fam) << '\n';
      } else {
        IntPoly p = g.is_tree() ? chi_d_tree(Tree(g), compute_d) : chi_d_contraction(g, compute_d);
        if (compute_verify) {
          IntPoly reference = chi_d_contraction(g, compute_d);
          if (reference != p) throw std::logic_error("verification failed: engines disagree");
          if (g.vertex_count() <= caps::effective(caps::kOracleVerticesMax) &&
              interpolate_from_counts(g, compute_d) != p)
            throw std::logic_error("verification failed: coloring oracle disagrees");
          err << "verified\n";
        }
        out << "{\"n\":" << g.vertex_count() << ",\"m\":" << g.edge_count() << ",\"d\":" << compute_d
            << ",\"poly\":" << p.to_json("k") << "}\n";
      }
    } else if (family->parsed()) {
      auto kind = family_kind_from_string(family_kind);
      if (!kind) {
        err << "usage error: unknown family kind '" << family_kind << "'\n";
        return 1;
      }
      Tree t = build(FamilySpec{*kind, family_param, family_member});
      if (family_emit == "edges")
        out << write_edge_list(t.graph());
      else
        out << graph6_encode(t.graph()) << '\n';
    } else if (census->parsed()) {
      CensusResult r = dcp_census(census_order, census_threads);
      if (census_format == "json") {
        out << census_to_json(r) << '\n';
        err << census_to_text(r);
      } else {
        out << census_to_text(r);
      }
    } else if (compare->parsed()) {
      Graph a = detail::read_graph_file(compare_files[0]);
      Graph b = detail::read_graph_file(compare_files[1]);
      ComparisonTable table;
      table.pair_labels.push_back("(" + detail::basename_of(compare_files[0]) + "," +
                                  detail::basename_of(compare_files[1]) + ")");
      table.cells.push_back(compare_fingerprints(fingerprint(a), fingerprint(b)));
      out << (compare_format == "json" ? table.to_json() + "\n" : table.to_text());
    } else if (gen->parsed()) {
      for (const Tree& t : generate_trees(gen_order)) out << graph6_encode(t.graph()) << '\n';
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace dcp
