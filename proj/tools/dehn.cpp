// dehn: command line front end for the diagram library.
// Exit codes: 0 ok / property holds, 1 property violated, 2 usage error,
// 3 resource cap hit.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dehn/area.hpp"
#include "dehn/dehn_props.hpp"
#include "dehn/enumerate.hpp"
#include "dehn/gallery.hpp"
#include "dehn/io.hpp"
#include "dehn/lattice_bound.hpp"

using nlohmann::json;
using namespace dehn;

namespace {

constexpr int kOk = 0, kViolated = 1, kUsage = 2, kCap = 3;

struct UsageError : Error {
  using Error::Error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Source {
  std::string gallery_id;
  std::string presentation_file;
  std::string model_file;
};

void add_source(CLI::App* c, Source& s) {
  c->add_option("--gallery", s.gallery_id, "built-in presentation id");
  c->add_option("--presentation", s.presentation_file, "presentation file, or a built-in id");
  c->add_option("--model", s.model_file, "word-problem model file for --presentation");
}

struct Loaded {
  Presentation p;
  std::optional<FreeProductModel> model;
  bool aspherical_lattice = false;
};

bool is_gallery_id(const std::string& s) {
  for (const auto& id : gallery_ids())
    if (id == s) return true;
  return false;
}

Loaded load(const Source& s) {
  std::string id = s.gallery_id;
  if (id.empty() && is_gallery_id(s.presentation_file)) id = s.presentation_file;
  if (!id.empty()) {
    if (!is_gallery_id(id)) throw UsageError("unknown gallery id: " + id);
    GalleryEntry g = gallery(id);
    return {g.presentation, g.model, g.aspherical_lattice};
  }
  if (s.presentation_file.empty()) throw UsageError("need --gallery or --presentation");
  Loaded l{parse_presentation(slurp(s.presentation_file)), std::nullopt, false};
  if (!s.model_file.empty()) l.model = parse_model(slurp(s.model_file), l.p);
  return l;
}

json report_json(const PropertyReport& r, const Presentation& p) {
  json j{{"property", r.property},   {"max_area", r.max_area}, {"scanned", r.scanned},
         {"exempt", r.exempt},       {"unknown", r.unknown},   {"not_minimal", r.not_minimal},
         {"holds", r.holds()},       {"violations", json::array()}};
  for (const auto& v : r.violations) {
    json e{{"reason", v.reason}};
    if (v.diagram.dart_count() > 0) {
      e["boundary"] = p.format(boundary_path(v.diagram).word);
      e["area"] = area(v.diagram);
      e["diagram"] = diagram_to_json(v.diagram, p.alphabet());
    }
    j["violations"].push_back(e);
  }
  return j;
}

void print_report(const PropertyReport& r, const Presentation& p, bool as_json) {
  if (as_json) {
    std::cout << report_json(r, p).dump() << "\n";
    return;
  }
  std::cout << r.property << ": " << (r.holds() ? "holds" : "VIOLATED") << " (scanned " << r.scanned << ", exempt "
            << r.exempt << ", unknown " << r.unknown << ", not minimal " << r.not_minimal << ", max area "
            << r.max_area << ")\n";
  for (const auto& v : r.violations) {
    std::cout << "  " << v.reason;
    if (v.diagram.dart_count() > 0)
      std::cout << ": boundary " << p.format(boundary_path(v.diagram).word) << ", area " << area(v.diagram);
    std::cout << "\n";
  }
}

PropertyReport pieces_report(const Presentation& p) {
  PropertyReport r;
  r.property = "pieces";
  for (const Piece& x : pieces(p)) {
    ++r.scanned;
    if (is_big(p, x))
      r.violations.push_back({DiskDiagram(), "big piece " + p.format(x.word) + " between relators " +
                                                 std::to_string(x.first.relator) + " and " +
                                                 std::to_string(x.second.relator)});
  }
  return r;
}

PropertyReport embed_report(const Loaded& l) {
  if (!l.model) throw UsageError("embedding check needs a model (--model or a gallery id)");
  return check_cells_embed(l.p, *l.model);
}

std::optional<DiskDiagram> figure(const std::string& id, int n, std::string& presentation_id) {
  if (id == "fig1") presentation_id = "thm2";
  else if (id == "fig3") presentation_id = "eq1";
  else return std::nullopt;
  return figure_diagram(id == "fig1" ? 1 : 3, n);
}

std::string render(const DiskDiagram& d, const Presentation& p, const std::string& format, int cutcell_def,
                   std::vector<int> highlight) {
  if (format == "json") return diagram_to_json(d, p.alphabet()).dump() + "\n";
  if (format == "dot") {
    DotOptions o;
    o.cutcell_def = cutcell_def;
    o.highlight_faces = std::move(highlight);
    return diagram_to_dot(d, p.alphabet(), o);
  }
  throw UsageError("format must be json or dot");
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"van Kampen diagrams: enumeration, areas and Dehn-type properties"};
  app.require_subcommand(1);

  Source src;
  std::string property = "dehn", word, method = "both", format = "json", id, dot_path,
              input;
  int max_area = 4, bound = 8, table_bound = 32, n = 2, n_from = 1, n_to = 3, c = 1, N = 30, cutcell_def = 1;
  std::optional<int> max_perimeter;
  std::size_t node_limit = 50'000'000, max_diagrams = 5'000'000;
  bool as_json = false, cross_check = false;

  auto* check = app.add_subcommand("check", "scan minimal diagrams for a property");
  add_source(check, src);
  check->add_option("--property", property, "dehn|gdehn1|gdehn2|gdehn3|pieces|embed")
      ->check(CLI::IsMember({"dehn", "gdehn1", "gdehn2", "gdehn3", "pieces", "embed"}));
  check->add_option("--max-area", max_area)->check(CLI::Range(1, 12));
  check->add_flag("--cross-check", cross_check, "also certify minimality by relator search");
  check->add_flag("--json", as_json);

  auto* enumerate = app.add_subcommand("enumerate", "stream reduced disk diagrams as JSON lines");
  add_source(enumerate, src);
  enumerate->add_option("--max-area", max_area)->check(CLI::Range(1, 12));
  enumerate->add_option("--max-perimeter", max_perimeter);
  enumerate->add_option("--max-diagrams", max_diagrams);

  auto* area_cmd = app.add_subcommand("area", "minimal area of a word");
  add_source(area_cmd, src);
  area_cmd->add_option("--word", word)->required();
  area_cmd->add_option("--bound", bound)->check(CLI::Range(0, 64));
  area_cmd->add_option("--method", method)->check(CLI::IsMember({"both", "diagram", "relator"}));
  area_cmd->add_option("--max-area", max_area, "enumeration bound for the diagram method")->check(CLI::Range(1, 12));
  area_cmd->add_option("--node-limit", node_limit);
  area_cmd->add_flag("--json", as_json);

  auto* table = app.add_subcommand("table", "areas of [x^n, y^n] for the first two generators");
  add_source(table, src);
  table->add_option("--from", n_from)->check(CLI::Range(1, 64));
  table->add_option("--to", n_to)->check(CLI::Range(1, 64));
  table->add_option("--bound", table_bound)->check(CLI::Range(0, 256));
  table->add_option("--node-limit", node_limit);
  table->add_flag("--json", as_json);

  auto* fbound = app.add_subcommand("fbound", "f(n) recursion and its arithmetic tail");
  fbound->add_option("--c", c)->check(CLI::Range(1, 64));
  fbound->add_option("--n", N)->check(CLI::Range(0, 2000));
  fbound->add_flag("--json", as_json);

  auto* gal = app.add_subcommand("gallery", "built-in presentations and figure diagrams");
  gal->require_subcommand(1);
  auto* gal_list = gal->add_subcommand("list");
  auto* gal_emit = gal->add_subcommand("emit");
  gal_emit->add_option("--id", id)->required();
  gal_emit->add_option("--n", n)->check(CLI::Range(1, 32));
  gal_emit->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text"}));
  gal_emit->add_option("--def", cutcell_def)->check(CLI::Range(1, 3));
  gal_emit->add_option("--dot", dot_path);

  auto* exp = app.add_subcommand("export", "convert a diagram to JSON or annotated DOT");
  add_source(exp, src);
  exp->add_option("--input", input, "diagram JSON file");
  exp->add_option("--id", id, "fig1 or fig3");
  exp->add_option("--n", n)->check(CLI::Range(1, 32));
  exp->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  exp->add_option("--def", cutcell_def)->check(CLI::Range(1, 3));
  exp->add_option("--dot", dot_path, "write DOT to this file");

  auto* pcs = app.add_subcommand("pieces", "list pieces and flag big ones");
  add_source(pcs, src);
  pcs->add_flag("--json", as_json);

  auto* emb = app.add_subcommand("embed", "check that every 2-cell embeds in the universal cover");
  add_source(emb, src);
  emb->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) {
      Loaded l = load(src);
      PropertyReport r;
      if (property == "pieces") {
        r = pieces_report(l.p);
      } else if (property == "embed") {
        r = embed_report(l);
      } else {
        std::optional<LatticeFillingBound> lattice;
        if (l.model && l.aspherical_lattice) lattice.emplace(l.p, *l.model);
        CorpusOptions opt;
        opt.cross_check_relator_search = cross_check;
        opt.lattice = lattice ? &*lattice : nullptr;
        EnumerationConfig cfg;
        cfg.max_area = max_area;
        r = check_property(minimal_corpus(Enumeration(l.p, cfg), opt), property == "dehn" ? 0 : property.back() - '0');
      }
      print_report(r, l.p, as_json);
      return r.holds() ? kOk : kViolated;
    }

    if (enumerate->parsed()) {
      Loaded l = load(src);
      EnumerationConfig cfg;
      cfg.max_area = max_area;
      cfg.max_perimeter = max_perimeter;
      cfg.max_diagrams = max_diagrams;
      Enumeration e(l.p, cfg);
      std::map<int, std::size_t> counts;
      for (const DiskDiagram& d : e.disks()) {
        json j{{"area", area(d)}, {"perimeter", perimeter(d)}, {"boundary", l.p.format(boundary_path(d).word)},
               {"diagram", diagram_to_json(d, l.p.alphabet())}};
        std::cout << j.dump() << "\n";
        ++counts[area(d)];
      }
      json footer{{"summary", true}, {"counts", json::object()}};
      std::size_t total = 0;
      for (auto [a, k] : counts) {
        footer["counts"][std::to_string(a)] = k;
        total += k;
      }
      footer["total"] = total;
      std::cout << footer.dump() << "\n";
      return kOk;
    }

    if (area_cmd->parsed() || table->parsed()) {
      Loaded l = load(src);
      std::optional<LatticeFillingBound> lattice;
      if (l.model && l.aspherical_lattice) lattice.emplace(l.p, *l.model);
      AreaOracleOptions opt;
      opt.bound = table->parsed() ? table_bound : bound;
      opt.lattice = lattice ? &*lattice : nullptr;
      opt.limits.node_limit = node_limit;
      std::optional<DiagramSearch> ds;
      if (area_cmd->parsed() && method != "relator") {
        EnumerationConfig cfg;
        cfg.max_area = max_area;
        ds.emplace(Enumeration(l.p, cfg));
        opt.diagram_search = &*ds;
      }
      opt.use_relator_search = table->parsed() || method != "diagram";
      auto result_json = [](const AreaResult& r) {
        return json{{"value", r.value ? json(*r.value) : json(nullptr)},
                    {"certified_exact", r.certified_exact},
                    {"exceeds_bound", r.exceeds_bound},
                    {"bound", r.bound},
                    {"method", to_string(r.method)},
                    {"nodes", r.nodes}};
      };
      if (area_cmd->parsed()) {
        Word w = l.p.parse(word);
        if (l.model && !l.model->is_trivial(w)) throw UsageError("word is not trivial in the group");
        AreaResult r = area_oracle(w, l.p, opt);
        if (as_json) {
          std::cout << result_json(r).dump() << "\n";
        } else if (r.value) {
          std::cout << "area " << *r.value << (r.certified_exact ? " (certified)" : " (uncertified)") << "\n";
        } else {
          std::cout << (r.exceeds_bound ? "area exceeds bound " : "undetermined within bound ") << r.bound << "\n";
        }
        return r.certified_exact || r.exceeds_bound ? kOk : kCap;
      }
      if (l.p.generator_count() < 2) throw UsageError("table needs at least two generators");
      if (n_to < n_from) throw UsageError("--to must be at least --from");
      auto rows = dehn_table(
          l.p, [](int k) { return power_commutator(Letter{0, 1}, Letter{1, 1}, k); }, n_from, n_to, opt);
      bool all = true;
      json arr = json::array();
      for (const auto& row : rows) {
        all = all && row.result.certified_exact && row.result.value;
        json j = result_json(row.result);
        j["n"] = row.n;
        j["length"] = row.length;
        arr.push_back(j);
        if (!as_json)
          std::cout << "n=" << row.n << " |w|=" << row.length << " area="
                    << (row.result.value ? std::to_string(*row.result.value) : std::string("?"))
                    << (row.result.certified_exact ? "" : " (uncertified)") << "\n";
      }
      if (as_json) std::cout << arr.dump() << "\n";
      return all ? kOk : kCap;
    }

    if (fbound->parsed()) {
      if (N < c + 2) throw UsageError("--n must be at least c + 2");
      FSequence f = f_values(c, N);
      PropositionReport r = verify_proposition_bound(c, N);
      if (as_json) {
        std::cout << json{{"c", c},
                          {"n", N},
                          {"f", f.values},
                          {"slope", r.slope},
                          {"K", r.K},
                          {"increments_nondecreasing", r.increments_nondecreasing},
                          {"arithmetic_tail", r.arithmetic_tail}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "f:";
        for (long long v : f.values) std::cout << " " << v;
        std::cout << "\nincrements nondecreasing: " << (r.increments_nondecreasing ? "yes" : "no")
                  << "\narithmetic tail from n=" << c + 2 << ": " << (r.arithmetic_tail ? "yes" : "no")
                  << "\nslope " << r.slope << ", K " << r.K << "\n";
      }
      return r.ok() ? kOk : kViolated;
    }

    if (gal_list->parsed()) {
      for (const auto& gid : gallery_ids()) {
        GalleryEntry g = gallery(gid);
        std::cout << gid << "\t" << g.description << "\n";
      }
      std::cout << "fig1\tn x n grid of pentagons with monogons over thm2\n";
      std::cout << "fig3\tn x n grid of split squares over eq1\n";
      return kOk;
    }

    if (gal_emit->parsed()) {
      std::string pid;
      if (auto d = figure(id, n, pid)) {
        GalleryEntry g = gallery(pid);
        if (format == "text") throw UsageError("text format is for presentations");
        std::vector<int> hi;
        if (id == "fig3") hi.push_back(figure3_face_r(*d));
        write_out(render(*d, g.presentation, format, cutcell_def, hi), dot_path);
        return kOk;
      }
      if (!is_gallery_id(id)) throw UsageError("unknown id: " + id);
      GalleryEntry g = gallery(id);
      if (format != "text" && format != "json") throw UsageError("presentations emit as text or json");
      if (format == "text") {
        std::cout << g.presentation.to_text();
      } else {
        json rels = json::array();
        for (const auto& r : g.presentation.relators()) rels.push_back(g.presentation.format(r));
        std::cout << json{{"id", id}, {"generators", g.presentation.alphabet().names()}, {"relators", rels}}.dump()
                  << "\n";
      }
      return kOk;
    }

    if (exp->parsed()) {
      std::string pid;
      std::optional<DiskDiagram> d;
      std::vector<int> hi;
      Presentation p;
      if (!id.empty()) {
        d = figure(id, n, pid);
        if (!d) throw UsageError("--id must be fig1 or fig3");
        p = gallery(pid).presentation;
        if (id == "fig3") hi.push_back(figure3_face_r(*d));
      } else {
        if (input.empty()) throw UsageError("need --id or --input");
        p = load(src).p;
        d = diagram_from_json(slurp(input), p.alphabet());
        auto v = validate(*d, p);
        if (!v.ok()) throw UsageError("input diagram is invalid");
      }
      std::string fmt = dot_path.empty() ? format : "dot";
      write_out(render(*d, p, fmt, cutcell_def, hi), dot_path);
      return kOk;
    }

    if (pcs->parsed()) {
      Loaded l = load(src);
      auto ps = pieces(l.p);
      if (as_json) {
        json arr = json::array();
        for (const auto& x : ps)
          arr.push_back({{"piece", l.p.format(x.word)},
                         {"length", x.word.size()},
                         {"relators", {x.first.relator, x.second.relator}},
                         {"big", is_big(l.p, x)}});
        std::cout << json{{"pieces", arr}, {"has_big_pieces", has_big_pieces(l.p)}}.dump() << "\n";
      } else {
        for (const auto& x : ps)
          std::cout << l.p.format(x.word) << "\trelators " << x.first.relator << "," << x.second.relator
                    << (is_big(l.p, x) ? "\tBIG" : "") << "\n";
        std::cout << "has big pieces: " << (has_big_pieces(l.p) ? "yes" : "no") << "\n";
      }
      return has_big_pieces(l.p) ? kViolated : kOk;
    }

    if (emb->parsed()) {
      Loaded l = load(src);
      PropertyReport r = embed_report(l);
      print_report(r, l.p, as_json);
      return r.holds() ? kOk : kViolated;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
