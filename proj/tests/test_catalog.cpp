#include <doctest.h>

#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "yutsis/canonical.hpp"
#include "yutsis/catalog.hpp"
#include "yutsis/exports.hpp"
#include "yutsis/lcf.hpp"

using namespace yutsis;

TEST_CASE("strata sizes and ordering up to 8 vertices") {
  Catalog catalog = build_catalog(8);
  CHECK(catalog.stratum(4).size() == 1);
  CHECK(catalog.stratum(6).size() == 2);
  CHECK(catalog.stratum(8).size() == 5);
  int last_rank = -1, last_n = 0;
  for (const CatalogEntry& e : catalog.entries) {
    if (e.n != last_n) last_rank = -1;
    int rank = class_rank(tag_from_string(e.class_tag));
    CHECK(rank >= last_rank);
    last_rank = rank;
    last_n = e.n;
    CHECK(bool(e.lcf) == true);  // everything through n=8 is Hamiltonian
  }
}

TEST_CASE("persistence round trip is byte identical") {
  Catalog catalog = build_catalog(8);
  std::ostringstream first;
  save_catalog(catalog, first);
  std::istringstream in(first.str());
  Catalog reloaded = load_catalog(in);
  std::ostringstream second;
  save_catalog(reloaded, second);
  CHECK(first.str() == second.str());
  REQUIRE(reloaded.entries.size() == catalog.entries.size());
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    CHECK(reloaded.entries[i].edges == catalog.entries[i].edges);
    CHECK(reloaded.entries[i].key == catalog.entries[i].key);
  }
}

TEST_CASE("stored signatures decode back to their graphs") {
  Catalog catalog = build_catalog(8);
  for (const CatalogEntry& e : catalog.entries) {
    REQUIRE(e.lcf.has_value());
    CHECK(are_isomorphic(decode(*e.lcf).first, CubicGraph(e.n, e.edges)));
  }
}

TEST_CASE("lookup finds relabeled graphs") {
  Catalog catalog = build_catalog(10);
  const CatalogEntry& pet = lookup(catalog, fixtures::petersen());
  CHECK(pet.key.to_string() == "W75 d2 g5 EE34.21829");
  CHECK(pet.class_tag == "IRR5");
  CHECK_FALSE(pet.lcf.has_value());

  const CatalogEntry& cube = lookup(catalog, decode("[-3,3]^4").first);
  REQUIRE(cube.lcf.has_value());
  CHECK(lcf_equivalent(*cube.lcf, "[-3,3]^4"));

  const CatalogEntry& util = lookup(catalog, relabel(fixtures::utility(), {5, 3, 1, 4, 2, 0}));
  CHECK(util.lcf == canonical_lcf(decode("[3]^6").first));

  CubicGraph big = decode("[6]^12").first;
  CHECK_THROWS_AS(lookup(catalog, big), Error);
}

TEST_CASE("dot export is stable, ordered low to high, and marks cut witnesses") {
  std::string k4 = export_dot(fixtures::k4());
  CHECK(k4 ==
        "digraph G {\n"
        "  0 -> 1;\n"
        "  0 -> 2;\n"
        "  0 -> 3;\n"
        "  1 -> 2;\n"
        "  1 -> 3;\n"
        "  2 -> 3;\n"
        "}\n");
  CHECK(export_dot(fixtures::k4()) == k4);

  std::string prism = export_dot(fixtures::prism3());
  CHECK(prism.find("0 -> 3 [color=red]") != std::string::npos);
  CHECK(prism.find("1 -> 4 [color=red]") != std::string::npos);
  CHECK(prism.find("2 -> 5 [color=red]") != std::string::npos);

  std::string pet = export_dot(fixtures::petersen());
  CHECK(pet.find("red") == std::string::npos);
  int arrows = 0;
  for (std::size_t i = 0; (i = pet.find("->", i)) != std::string::npos; ++i) ++arrows;
  CHECK(arrows == 15);
}

TEST_CASE("SMILES export uses ring closures that reparse to the edge set") {
  std::string k4 = export_smiles(fixtures::k4(), {0, 1, 2, 3});
  CHECK(k4 == "C12C3C1C23");
  CHECK(parse_smiles_bonds(k4) == fixtures::k4().edges());

  auto [util, ring] = decode("[3]^6");
  std::string smiles = export_smiles(util, ring);
  CHECK(parse_smiles_bonds(smiles) == util.edges());

  // 18 vertices force closure numbers past 9 and the '%nn' form.
  auto [ml18, ring18] = decode("[9]^18");
  std::string big = export_smiles(ml18, ring18);
  CHECK(big.find("%10") != std::string::npos);
  CHECK(parse_smiles_bonds(big) == ml18.edges());
}

TEST_CASE("molfile export carries the counts line, carbons, and sorted bonds") {
  std::string mol = export_molfile(fixtures::petersen());
  CHECK(mol.find(" 10 15  0  0  0  0  0  0  0  0999 V2000\n") != std::string::npos);
  int carbons = 0;
  std::istringstream lines(mol);
  std::string line;
  bool saw_end = false;
  while (std::getline(lines, line)) {
    if (line.find(" C ") != std::string::npos) ++carbons;
    if (line == "M  END") saw_end = true;
  }
  CHECK(carbons == 10);
  CHECK(saw_end);
  CHECK(mol.find("  1  2  1  0\n") != std::string::npos);

  std::string k4 = export_molfile(fixtures::k4());
  CHECK(k4.find("  4  6  0") != std::string::npos);
  CHECK(export_molfile(decode("[7]^14").first).find(" 14 21  0") != std::string::npos);
}

TEST_CASE("directed dot export follows the arc orientations") {
  CubicGraph base = fixtures::k4();
  std::vector<std::pair<int, int>> arcs{{1, 0}, {0, 2}, {3, 0}, {2, 1}, {1, 3}, {2, 3}};
  DirectedCubicGraph dg(base, arcs);
  std::string dot = export_dot(dg);
  CHECK(dot.find("1 -> 0;") != std::string::npos);
  CHECK(dot.find("3 -> 0;") != std::string::npos);
  CHECK(dot.find("0 -> 2;") != std::string::npos);
}

TEST_CASE("irreducible-only filtering keeps ordinals from the full stratum") {
  Catalog full = build_catalog(6);
  Catalog filtered = build_catalog(6, 6);
  CHECK(filtered.stratum(6).size() == 1);  // only the utility graph
  const CatalogEntry* util = filtered.stratum(6).front();
  bool found = false;
  for (const CatalogEntry* e : full.stratum(6))
    if (e->ordinal == util->ordinal && e->edges == util->edges) found = true;
  CHECK(found);
  CHECK(filtered.stratum(4).size() == 1);
}
