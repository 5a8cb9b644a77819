// monocat: command-line front end. Exit codes: 0 pass, 1 negative answer, 2 bad input, 3 internal error.
#include <cctype>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "monocat/catalog.hpp"
#include "monocat/decomp.hpp"
#include "monocat/json_io.hpp"
#include "monocat/mimo.hpp"
#include "monocat/tree.hpp"

using namespace monocat;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) fail_input("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail_input("cannot write '" + path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json meta(const std::string& command, std::uint64_t seed) {
  return Json{{"command", command}, {"seed", seed}, {"version", kVersion}};
}

Rep load_rep(const std::string& path) { return rep_from_json(parse_json(read_text(path))); }

// Tree argument: syntax string ("3(2)(10)") or a path to tree JSON.
ValuatedTree load_tree(const std::string& arg, int* n) {
  if (!arg.empty() && (std::isdigit(static_cast<unsigned char>(arg[0])) || arg[0] == '(' || arg[0] == ' '))
    return parse_tree(arg);
  return tree_from_json(parse_json(read_text(arg)), n);
}

Json tree_map_json(const std::vector<int>& r) {
  Json j = Json::array();
  for (int x : r) j.push_back(x + 1);  // 1-based, 0 = root
  return j;
}

Quiver load_quiver(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '"')) return quiver_from_json(parse_json(arg));
  if (arg.size() >= 2 && std::isalpha(static_cast<unsigned char>(arg[0])) && std::isdigit(static_cast<unsigned char>(arg[1])))
    return Quiver::from_shorthand(arg);
  return quiver_from_json(parse_json(read_text(arg)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in monomorphism categories over Z/(p^n)"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for every randomized step (recorded in the output)");

  std::function<int()> run;

  // check-mono
  std::string input;
  auto* c_mono = app.add_subcommand("check-mono", "Is every assembled incoming map injective?");
  c_mono->add_option("rep", input, "Representation JSON ('-' for stdin)")->required();
  c_mono->callback([&] {
    run = [&] {
      const MonoResult r = is_mono(load_rep(input));
      Json j = meta("check-mono", seed);
      j.update(mono_to_json(r));
      std::cout << dump(j);
      return r.mono ? 0 : 1;
    };
  });

  // mimo
  std::string out_path, proj_path;
  bool random_lift = false;
  auto* c_mimo = app.add_subcommand("mimo", "Minimal right approximation by a monomorphic representation");
  c_mimo->add_option("rep", input, "Representation JSON ('-' for stdin)")->required();
  c_mimo->add_option("-o,--output", out_path, "Write the Mimo representation here (default stdout)");
  c_mimo->add_option("--projection", proj_path, "Write the projection Mimo(M) -> M here");
  c_mimo->add_flag("--random-lift", random_lift, "Perturb the lifts using --seed");
  c_mimo->callback([&] {
    run = [&] {
      const Rep M = load_rep(input);
      const MimoResult r = random_lift ? mimo(M, seed) : mimo(M);
      Json rep = rep_to_json(r.rep);
      rep["meta"] = meta("mimo", seed);
      write_text(out_path, dump(rep));
      if (!proj_path.empty()) {
        Json pj = morphism_to_json(r.projection);
        pj["meta"] = meta("mimo", seed);
        write_text(proj_path, dump(pj));
      }
      if (!out_path.empty() && out_path != "-") {
        Json j = meta("mimo", seed);
        j["input_mono"] = is_mono(M).mono;
        j["added_length"] = total_length(r.rep) - total_length(M);
        j["output"] = out_path;
        if (!proj_path.empty()) j["projection"] = proj_path;
        std::cout << dump(j);
      }
      return 0;
    };
  });

  // decompose
  auto* c_dec = app.add_subcommand("decompose", "Krull-Schmidt decomposition with an isomorphism certificate");
  c_dec->add_option("rep", input, "Representation JSON ('-' for stdin)")->required();
  c_dec->add_option("-o,--output", out_path, "Write the certificate here (default stdout)");
  c_dec->callback([&] {
    run = [&] {
      const Decomposition D = decompose(load_rep(input), seed);
      Json j = meta("decompose", seed);
      const Json cert = decomposition_to_json(D);
      for (const auto& [k, v] : cert.items())
        if (k != "seed") j[k] = v;
      write_text(out_path, dump(j));
      return 0;
    };
  });

  // iso
  std::string other;
  auto* c_iso = app.add_subcommand("iso", "Are two representations isomorphic?");
  c_iso->add_option("first", input, "Representation JSON")->required();
  c_iso->add_option("second", other, "Representation JSON")->required();
  c_iso->callback([&] {
    run = [&] {
      const Rep M = load_rep(input), N = load_rep(other);
      if (!(M.quiver == N.quiver) || !(M.ring == N.ring)) fail_input("iso: quiver or ring differ");
      const bool iso = is_isomorphic(M, N, seed);
      Json j = meta("iso", seed);
      j["isomorphic"] = iso;
      std::cout << dump(j);
      return iso ? 0 : 1;
    };
  });

  // tree
  std::string tree_arg;
  int n = 0, p = 2, max_nodes = 7;
  bool as_json = false;
  auto* c_tree = app.add_subcommand("tree", "Valuated trees");
  c_tree->require_subcommand(1);
  auto add_tree_arg = [&](CLI::App* c) { c->add_option("tree", tree_arg, "Tree syntax such as \"3(2)(10)\", or a tree JSON file")->required(); };

  auto* t_s = c_tree->add_subcommand("s-of-t", "The valuated group S(T)");
  add_tree_arg(t_s);
  t_s->add_option("--n", n, "Exponent n")->required();
  t_s->add_option("--p", p, "Prime p");
  t_s->callback([&] {
    run = [&] {
      const ValuatedTree T = load_tree(tree_arg, &n);
      const TreeGroup G = s_of_t(T, Ring(p, n));
      Json j = meta("tree s-of-t", seed);
      j["tree"] = tree_to_json(T, n);
      j["group"] = valuated_group_to_json(G.group);
      Json nodes = Json::array();
      for (int x = 0; x < T.size(); ++x) nodes.push_back(G.node_coords.col(x));
      j["node_coordinates"] = nodes;
      std::cout << dump(j);
      return 0;
    };
  });

  auto* t_irr = c_tree->add_subcommand("irretractable", "Only the identity and the collapse are retractions?");
  add_tree_arg(t_irr);
  t_irr->callback([&] {
    run = [&] {
      const ValuatedTree T = load_tree(tree_arg, nullptr);
      check_tree(T, 9);
      const RetractionResult r = is_irretractable(T);
      Json j = meta("tree irretractable", seed);
      j["tree"] = to_string(T);
      j["irretractable"] = r.irretractable;
      if (r.witness) j["witness"] = tree_map_json(*r.witness);
      std::cout << dump(j);
      return r.irretractable ? 0 : 1;
    };
  });

  auto* t_hull = c_tree->add_subcommand("hull", "The hull T_{n-1} and the inclusion of T");
  add_tree_arg(t_hull);
  t_hull->add_option("--n", n, "Exponent n")->required();
  t_hull->callback([&] {
    run = [&] {
      const ValuatedTree T = load_tree(tree_arg, &n);
      const HullResult H = tree_hull(T, n);
      Json j = meta("tree hull", seed);
      j["tree"] = tree_to_json(T, n);
      j["hull"] = tree_to_json(H.hull, n);
      j["gamma"] = tree_map_json(H.gamma);
      std::cout << dump(j);
      return 0;
    };
  });

  auto* t_real = c_tree->add_subcommand("realize", "The monomorphism S(T) -> S(hull) as an A2 representation");
  add_tree_arg(t_real);
  t_real->add_option("--n", n, "Exponent n")->required();
  t_real->add_option("--p", p, "Prime p");
  t_real->callback([&] {
    run = [&] {
      const ValuatedTree T = load_tree(tree_arg, &n);
      Json rep = rep_to_json(m_of_t(T, Ring(p, n)));
      rep["name"] = "M_" + to_string(T);
      rep["meta"] = meta("tree realize", seed);
      std::cout << dump(rep);
      return 0;
    };
  });

  auto* t_enum = c_tree->add_subcommand("enumerate", "Irretractable trees up to isomorphism, one per line");
  t_enum->add_option("--n", n, "Values lie in [0, n-1]")->required();
  t_enum->add_option("--max-nodes", max_nodes, "Largest tree size (default 7)");
  t_enum->add_flag("--json", as_json, "Emit JSON instead of lines");
  t_enum->callback([&] {
    run = [&] {
      const auto trees = enumerate_irretractable_trees(n, max_nodes);
      if (as_json) {
        Json j = meta("tree enumerate", seed);
        j["n"] = n;
        j["max_nodes"] = max_nodes;
        Json list = Json::array();
        for (const auto& T : trees) list.push_back(to_string(T));
        j["trees"] = list;
        std::cout << dump(j);
      } else {
        for (const auto& T : trees) std::cout << to_string(T) << "\n";
      }
      return 0;
    };
  });

  // catalog
  bool d4 = false;
  auto* c_cat = app.add_subcommand("catalog", "Indecomposable catalogs for sub(Z/p^n), n <= 5, and D4 over Z/p^2");
  c_cat->require_subcommand(1);
  auto* k_ver = c_cat->add_subcommand("verify", "Certify the catalog entries");
  auto* k_list = c_cat->add_subcommand("list", "Print the catalog entries as JSON");
  for (auto* c : {k_ver, k_list}) {
    c->add_option("--n", n, "3, 4 or 5 (ignored with --d4)");
    c->add_option("--p", p, "Prime p (default 2)");
    c->add_flag("--d4", d4, "The D4 catalog over Z/p^2");
  }
  k_ver->add_flag("--json", as_json, "Emit the report as JSON");
  k_ver->callback([&] {
    run = [&] {
      if (!d4 && n == 0) fail_input("catalog verify: --n is required without --d4");
      const CatalogReport r = d4 ? verify_d4_catalog(p) : verify_catalog(n, p);
      if (as_json) {
        Json j = meta("catalog verify", seed);
        j["catalog"] = d4 ? "d4" : "sub";
        const Json report = catalog_report_to_json(r);
        for (const auto& [k, v] : report.items())
          if (k != "schema") j[k] = v;
        std::cout << dump(j);
      } else {
        std::cout << "catalog " << (d4 ? "d4" : "sub") << " n=" << r.n << " p=" << r.p << ": " << (r.pass() ? "pass" : "FAIL") << " "
                  << r.classes << "/" << r.entries << "\n";
        std::cout << "  monomorphic " << r.mono << ", indecomposable " << r.indecomposable << ", isomorphism classes " << r.classes << "\n";
        if (r.trees_enumerated >= 0) {
          std::cout << "  irretractable trees " << r.trees_enumerated << ", tree labels confirmed " << r.tree_matches
                    << ", simply presented entries " << r.simply_presented << "\n";
          std::cout << "  not simply presented:";
          for (const auto& s : r.not_simply_presented) std::cout << " " << s;
          std::cout << (r.not_simply_presented.empty() ? " none\n" : "\n");
        }
        for (const auto& f : r.failures) std::cout << "  failure: " << f << "\n";
      }
      return r.pass() ? 0 : 1;
    };
  });
  k_list->callback([&] {
    run = [&] {
      if (!d4 && n == 0) fail_input("catalog list: --n is required without --d4");
      const auto entries = d4 ? build_d4_catalog(p) : build_catalog(n, p);
      Json j = meta("catalog list", seed);
      Json list = Json::array();
      for (const auto& e : entries) {
        Json x{{"name", e.name},
               {"source", e.source == EntrySource::Tree ? "tree" : e.source == EntrySource::Y ? "Y" : "matrix"}};
        if (e.tree) x["tree"] = *e.tree;
        x["rep"] = rep_to_json(e.rep);
        list.push_back(std::move(x));
      }
      j["entries"] = list;
      std::cout << dump(j);
      return 0;
    };
  });

  // reptype
  std::string quiver_arg;
  auto* c_rt = app.add_subcommand("reptype", "Finite or infinite representation type of mono(Q, Z/p^n)");
  c_rt->add_option("--quiver", quiver_arg, "Shorthand (a2..a9, d4..d9, e6..e8), inline quiver JSON, or a JSON file")->required();
  c_rt->add_option("--n", n, "Exponent n")->required();
  c_rt->add_flag("--json", as_json, "Emit JSON");
  c_rt->callback([&] {
    run = [&] {
      const RepTypeVerdict v = rep_type(load_quiver(quiver_arg), n);
      const std::string verdict = std::string(v.finite ? "finite" : "infinite") + (v.note ? "/" + *v.note : "");
      if (as_json) {
        Json j = meta("reptype", seed);
        j["quiver"] = quiver_to_json(load_quiver(quiver_arg));
        j["n"] = n;
        j["finite"] = v.finite;
        if (v.note) j["note"] = *v.note;
        j["verdict"] = verdict;
        std::cout << dump(j);
      } else {
        std::cout << verdict << "\n";
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return run ? run() : 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
