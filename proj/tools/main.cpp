#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "yutsis/canonical.hpp"
#include "yutsis/catalog.hpp"
#include "yutsis/connectivity.hpp"
#include "yutsis/enumerate.hpp"
#include "yutsis/exports.hpp"
#include "yutsis/graph.hpp"
#include "yutsis/hamilton.hpp"
#include "yutsis/invariants.hpp"
#include "yutsis/lcf.hpp"
#include "yutsis/wigner.hpp"

namespace {

using namespace yutsis;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::NotFound, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CubicGraph load_graph(const std::string& path) {
  auto [n, edges] = parse_edge_list(read_input(path));
  return CubicGraph(n, std::move(edges));
}

Catalog stratum_catalog(int n) {
  Catalog catalog;
  std::vector<CubicGraph> graphs = enumerate_cubic(n);
  for (std::size_t i = 0; i < graphs.size(); ++i)
    catalog.entries.push_back(make_entry(graphs[i], static_cast<int>(i) + 1));
  return catalog;
}

std::optional<YutsisTag> parse_class_filter(const std::string& value) {
  if (value.empty() || value == "all") return std::nullopt;
  if (value == "c1" || value == "1-connected") return YutsisTag::OneConnected;
  if (value == "c2" || value == "2-connected") return YutsisTag::TwoConnected;
  if (value == "c3r" || value == "3-connected-reducible" || value == "reducible")
    return YutsisTag::ThreeConnectedReducible;
  return YutsisTag::Irreducible;  // "irr"/"irreducible"; others rejected at parse time
}

void print_entry_line(std::ostream& out, const CatalogEntry& e) {
  Catalog one;
  one.entries.push_back(e);
  std::ostringstream buf;
  save_catalog(one, buf);
  std::string text = buf.str();
  out << text.substr(text.find('\n') + 1);
}

int run(int argc, char** argv) {
  CLI::App app{"catalog of the cubic graphs behind closed Wigner 3jm products"};
  app.require_subcommand(1);

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "list cubic graphs on n vertices");
  int enum_n = 0;
  std::string enum_class = "all";
  std::string enum_format = "lcf";
  cmd_enum->add_option("--n", enum_n, "vertex count (even)")->required();
  cmd_enum->add_option("--class", enum_class, "filter: all, c1, c2, c3r, irreducible")
      ->check(CLI::IsMember({"all", "c1", "1-connected", "c2", "2-connected", "c3r",
                             "3-connected-reducible", "reducible", "irr", "irreducible"}));
  cmd_enum->add_option("--format", enum_format, "lcf, edges or key")
      ->check(CLI::IsMember({"lcf", "edges", "key"}));

  // classify
  auto* cmd_classify = app.add_subcommand("classify", "Yutsis connectivity class of a graph");
  std::string classify_file;
  cmd_classify->add_option("file", classify_file, "edge-list file ('-' for stdin)")->required();

  // cycles
  auto* cmd_cycles = app.add_subcommand("cycles", "all Hamiltonian cycles, one vertex chain per line");
  std::string cycles_file;
  cmd_cycles->add_option("file", cycles_file, "edge-list file ('-' for stdin)")->required();

  // lcf-encode
  auto* cmd_encode = app.add_subcommand("lcf-encode", "LCF strings of a graph's Hamiltonian cycles");
  std::string encode_file;
  cmd_encode->add_option("file", encode_file, "edge-list file ('-' for stdin)")->required();

  // lcf-decode
  auto* cmd_decode = app.add_subcommand("lcf-decode", "edge list of an LCF string");
  std::string decode_text;
  cmd_decode->add_option("notation", decode_text, "LCF string, e.g. \"[3]^6\"")->required();

  // invariants
  auto* cmd_inv = app.add_subcommand("invariants", "Wiener, diameter, girth and Estrada key");
  std::string inv_file;
  cmd_inv->add_option("file", inv_file, "edge-list file ('-' for stdin)")->required();

  // lookup
  auto* cmd_lookup = app.add_subcommand("lookup", "find the catalog entry isomorphic to a graph");
  std::string lookup_file, lookup_catalog;
  cmd_lookup->add_option("file", lookup_file, "edge-list file ('-' for stdin)")->required();
  cmd_lookup->add_option("--catalog", lookup_catalog, "catalog file")->required();

  // export
  auto* cmd_export = app.add_subcommand("export", "emit dot, molfile or SMILES");
  std::string export_file, export_format;
  cmd_export->add_option("file", export_file, "edge-list file ('-' for stdin)")->required();
  cmd_export->add_option("--format", export_format, "dot, mol or smiles")
      ->required()
      ->check(CLI::IsMember({"dot", "mol", "smiles"}));

  // wigner
  auto* cmd_wigner = app.add_subcommand("wigner", "identify a closed 3jm product");
  std::string wigner_file, wigner_catalog;
  cmd_wigner->add_option("file", wigner_file, "factor file ('-' for stdin)")->required();
  cmd_wigner->add_option("--catalog", wigner_catalog, "catalog file (otherwise built on the fly)");

  // catalog-build
  auto* cmd_build = app.add_subcommand("catalog-build", "build and save a catalog");
  int build_max_n = 0;
  bool build_irr14 = false;
  std::string build_out;
  cmd_build->add_option("--max-n", build_max_n, "largest stratum (even, 4..14)")->required();
  cmd_build->add_flag("--irreducible-only-14", build_irr14, "store only irreducible entries at n=14");
  cmd_build->add_option("--out", build_out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;  // usage error
  }

  if (*cmd_enum) {
    auto filter = parse_class_filter(enum_class);
    std::vector<CubicGraph> graphs = enumerate_cubic(enum_n);
    for (const CubicGraph& g : graphs) {
      if (filter && classify(g).tag != *filter) continue;
      if (enum_format == "edges") {
        std::cout << format_entry_edges(g.edges()) << "\n";
      } else if (enum_format == "key") {
        std::cout << invariant_key(g).to_string() << "\n";
      } else {
        auto lcf = canonical_lcf(g);
        std::cout << (lcf ? *lcf : "NONHAM") << "\n";
      }
    }
  } else if (*cmd_classify) {
    CubicGraph g = load_graph(classify_file);
    YutsisClass cls = classify(g);
    std::cout << "class: " << cls.tag_string() << "\n";
    if (cls.witness) {
      std::cout << "cut:";
      for (const Edge& e : cls.witness->edges) std::cout << " " << e.u << "-" << e.v;
      std::cout << "\nsides: " << cls.witness->side_sizes.first << " "
                << cls.witness->side_sizes.second << "\n";
    }
    if (cls.tag == YutsisTag::Irreducible)
      std::cout << "cyclic-connectivity: "
                << (cls.cyclic_connectivity ? std::to_string(*cls.cyclic_connectivity) : "none")
                << "\n";
  } else if (*cmd_cycles) {
    CubicGraph g = load_graph(cycles_file);
    for (const HamiltonianCycle& c : hamiltonian_cycles(g)) {
      for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "") << c[i];
      std::cout << "\n";
    }
  } else if (*cmd_encode) {
    CubicGraph g = load_graph(encode_file);
    std::vector<std::string> strings = cycle_lcf_strings(g);
    if (strings.empty()) {
      std::cout << "NONHAM\n";
    } else {
      std::cout << "LCF ";
      for (std::size_t i = 0; i < strings.size(); ++i) std::cout << (i ? " = " : "") << strings[i];
      std::cout << "\n";
    }
  } else if (*cmd_decode) {
    std::cout << format_edge_list(decode(decode_text).first);
  } else if (*cmd_inv) {
    std::cout << invariant_key(load_graph(inv_file)).to_string() << "\n";
  } else if (*cmd_lookup) {
    std::ifstream in(lookup_catalog);
    if (!in) throw Error(ErrorCode::NotFound, "cannot open catalog '" + lookup_catalog + "'");
    Catalog catalog = load_catalog(in);
    print_entry_line(std::cout, lookup(catalog, load_graph(lookup_file)));
  } else if (*cmd_export) {
    CubicGraph g = load_graph(export_file);
    if (export_format == "dot") {
      std::cout << export_dot(g);
    } else if (export_format == "mol") {
      std::cout << export_molfile(g);
    } else {
      auto cycles = hamiltonian_cycles(g);
      if (cycles.empty())
        throw Error(ErrorCode::NonHamiltonian, "SMILES needs a Hamiltonian cycle");
      std::cout << export_smiles(g, cycles.front()) << "\n";
    }
  } else if (*cmd_wigner) {
    WignerSum sum = parse_wigner(read_input(wigner_file));
    DirectedCubicGraph dg = sum_to_graph(sum);
    std::cout << "factors: " << sum.factors.size() << "\n";
    if (!dg.base().connected()) {
      std::cout << "connected: no (the sum factorizes)\n";
      return 0;
    }
    Catalog catalog;
    if (!wigner_catalog.empty()) {
      std::ifstream in(wigner_catalog);
      if (!in) throw Error(ErrorCode::NotFound, "cannot open catalog '" + wigner_catalog + "'");
      catalog = load_catalog(in);
    } else {
      catalog = stratum_catalog(dg.base().n());
    }
    IdentifyResult id = identify(sum, catalog);
    std::cout << "symbol: " << id.symbol << "\n";
    std::cout << "class: " << id.entry->class_tag << "\n";
    std::cout << "key: " << id.entry->key.to_string() << "\n";
    std::cout << "lcf: " << (id.entry->lcf ? *id.entry->lcf : "NONHAM") << "\n";
  } else if (*cmd_build) {
    Catalog catalog = build_catalog(build_max_n, build_irr14 ? std::optional<int>(14) : std::nullopt);
    std::ofstream out(build_out);
    if (!out) throw Error(ErrorCode::NotFound, "cannot open '" + build_out + "' for writing");
    save_catalog(catalog, out);
    std::cout << "wrote " << catalog.entries.size() << " entries to " << build_out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const yutsis::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
