// Command-line surface for the Bott manifold classifier.
//
// Exit codes: 0 success / isomorphic, 1 well-formed negative answer,
// 2 invalid input or not Z-trivial, 3 ambiguous reconstruction.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bott/census.hpp"
#include "bott/deck.hpp"
#include "bott/forest.hpp"
#include "bott/ring.hpp"
#include "bott/text_io.hpp"
#include "bott/tower.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw bott::Error("cannot open file: " + path);
    os << in.rdbuf();
  }
  return os.str();
}

int cmd_chern(const std::string& file) {
  bott::BottMatrix m = bott::parse_matrix(read_input(file));
  std::cout << bott::to_string(bott::total_chern(bott::presentation(m))) << '\n';
  return 0;
}

int cmd_diagram(const std::string& file) {
  bott::BottMatrix m = bott::parse_matrix(read_input(file));
  auto d = bott::diagram(m);
  if (auto* err = std::get_if<bott::NotZTrivial>(&d)) {
    std::cout << bott::to_string(*err) << '\n';
    return 2;
  }
  std::cout << bott::format_diagram(std::get<bott::BottDiagram>(d));
  return 0;
}

int cmd_iso(const std::string& file1, const std::string& file2, bool with_chern) {
  bott::BottMatrix m1 = bott::parse_matrix(read_input(file1));
  bott::BottMatrix m2 = bott::parse_matrix(read_input(file2));
  auto res = bott::biholomorphic(m1, m2);
  if (auto* err = std::get_if<bott::NotZTrivial>(&res)) {
    std::cout << bott::to_string(*err) << '\n';
    return 2;
  }
  bool same = std::get<bool>(res);
  std::cout << (same ? "isomorphic" : "distinct") << '\n';
  if (with_chern) {
    auto c1 = std::get<bott::RingElement>(bott::chern_in_z_basis(m1));
    auto c2 = std::get<bott::RingElement>(bott::chern_in_z_basis(m2));
    std::cout << bott::to_string(c1, "z") << '\n';
    std::cout << bott::to_string(c2, "z") << '\n';
    std::cout << "chern: " << (c1 == c2 ? "equal" : "distinct") << '\n';
  }
  return same ? 0 : 1;
}

int cmd_deck(const std::string& file) {
  bott::BottDiagram d = bott::parse_diagram(read_input(file));
  std::cout << bott::format_deck(bott::make_deck(d));
  return 0;
}

int cmd_reconstruct(const std::string& file, bool labelled) {
  bott::Deck deck = bott::parse_deck(read_input(file));
  auto res = bott::reconstruct(deck, labelled);
  if (auto* inv = std::get_if<bott::InvalidDeck>(&res)) {
    std::cout << "invalid deck: " << inv->reason << '\n';
    return 2;
  }
  if (auto* amb = std::get_if<bott::Ambiguous>(&res)) {
    std::cout << "ambiguous\n" << bott::format_diagram(amb->shape);
    std::cout << "unknown-labels:";
    for (int v : amb->unknown) std::cout << ' ' << v;
    std::cout << '\n';
    return 3;
  }
  std::cout << bott::format_diagram(std::get<bott::BottDiagram>(res));
  return 0;
}

int cmd_enumerate(int n, long long qmax) {
  auto list = qmax > 0 ? bott::enumerate_labelled(n, qmax) : bott::enumerate_shapes(n);
  for (const auto& d : list) std::cout << bott::format_diagram(d) << '\n';
  std::cout << "count=" << list.size() << '\n';
  return 0;
}

int cmd_tower(const std::string& file) {
  bott::BottDiagram d = bott::parse_diagram(read_input(file));
  std::cout << bott::format_matrix(bott::tower_of_diagram(d));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classifier for Z-trivial Bott manifolds via Bott diagrams"};
  app.require_subcommand(1);

  std::string file1, file2;
  bool with_chern = false;
  bool labelled = false;
  int enum_n = 1;
  long long qmax = 0;

  auto* chern = app.add_subcommand("chern", "total Chern class of a tower");
  chern->add_option("tower-file", file1)->required();

  auto* diagram = app.add_subcommand("diagram", "Bott diagram of a tower");
  diagram->add_option("tower-file", file1)->required();

  auto* iso = app.add_subcommand("iso", "biholomorphism test for two towers");
  iso->add_option("tower-file-1", file1)->required();
  iso->add_option("tower-file-2", file2)->required();
  iso->add_flag("--chern", with_chern, "also print Chern classes in the z-basis");

  auto* deck = app.add_subcommand("deck", "deck of cards of a forest");
  deck->add_option("forest-file", file1)->required();

  auto* rec = app.add_subcommand("reconstruct", "rebuild a forest from its deck");
  rec->add_option("deck-file", file1)->required();
  rec->add_flag("--labelled", labelled, "labelled reconstruction");

  auto* enumerate = app.add_subcommand("enumerate", "census of Bott diagrams");
  enumerate->add_option("n", enum_n, "vertex count")->required();
  enumerate->add_option("--qmax", qmax, "enumerate labelled classes up to this label");

  auto* tower = app.add_subcommand("tower", "tower realizing a Bott diagram");
  tower->add_option("forest-file", file1)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (chern->parsed()) return cmd_chern(file1);
    if (diagram->parsed()) return cmd_diagram(file1);
    if (iso->parsed()) return cmd_iso(file1, file2, with_chern);
    if (deck->parsed()) return cmd_deck(file1);
    if (rec->parsed()) return cmd_reconstruct(file1, labelled);
    if (enumerate->parsed()) return cmd_enumerate(enum_n, qmax);
    if (tower->parsed()) return cmd_tower(file1);
  } catch (const bott::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const bott::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
