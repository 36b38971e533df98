#pragma once

// Exact word problem in Z^d * F_k through syllable normal forms, together
// with the lattice projection and the cell-embedding test.

#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "dehn/presentation.hpp"
#include "dehn/word.hpp"

namespace dehn {

using Lattice = std::vector<long long>;

struct LatticeVector {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  LatticeVector operator+(LatticeVector o) const { return {x + o.x, y + o.y}; }
  LatticeVector operator-(LatticeVector o) const { return {x - o.x, y - o.y}; }
};

/// Element of Z^d * F_k in normal form: alternating lattice and free
/// syllables, none of them trivial. The identity has no syllables.
class GroupElement {
 public:
  // Free syllables use Letter::gen in [0, k).
  using Syllable = std::variant<Lattice, Word>;

  GroupElement() = default;

  static GroupElement lattice(Lattice v) {
    GroupElement g;
    g.push(Syllable(std::move(v)));
    return g;
  }
  static GroupElement free(Word w) {
    GroupElement g;
    g.push(Syllable(free_reduce(w)));
    return g;
  }

  bool is_identity() const { return syllables_.empty(); }
  const std::vector<Syllable>& syllables() const { return syllables_; }

  GroupElement operator*(const GroupElement& o) const {
    GroupElement r = *this;
    for (const auto& s : o.syllables_) r.push(s);
    return r;
  }
  GroupElement& operator*=(const GroupElement& o) {
    for (const auto& s : o.syllables_) push(s);
    return *this;
  }

  GroupElement inverse() const {
    GroupElement r;
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
      if (const auto* v = std::get_if<Lattice>(&*it)) {
        Lattice n = *v;
        for (auto& c : n) c = -c;
        r.syllables_.push_back(std::move(n));
      } else {
        r.syllables_.push_back(dehn::inverse(std::get<Word>(*it)));
      }
    }
    return r;
  }

  /// Sum of lattice syllables: the image under the map killing F_k.
  Lattice lattice_part(std::size_t rank) const {
    Lattice out(rank, 0);
    for (const auto& s : syllables_)
      if (const auto* v = std::get_if<Lattice>(&s))
        for (std::size_t i = 0; i < rank && i < v->size(); ++i) out[i] += (*v)[i];
    return out;
  }

  std::string to_string() const {
    if (syllables_.empty()) return "1";
    std::string s;
    for (const auto& syl : syllables_) {
      if (!s.empty()) s += " ";
      if (const auto* v = std::get_if<Lattice>(&syl)) {
        s += "(";
        for (std::size_t i = 0; i < v->size(); ++i) s += (i ? "," : "") + std::to_string((*v)[i]);
        s += ")";
      } else {
        for (Letter x : std::get<Word>(syl))
          s += "f" + std::to_string(x.gen + 1) + (x.sign < 0 ? "^-1" : "");
      }
    }
    return s;
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.key() < b.key(); }

  /// Flat encoding, unique per element; usable as a map key.
  std::vector<long long> key() const {
    std::vector<long long> k;
    for (const auto& syl : syllables_) {
      if (const auto* v = std::get_if<Lattice>(&syl)) {
        k.push_back(-1);
        k.insert(k.end(), v->begin(), v->end());
      } else {
        k.push_back(-2);
        for (Letter x : std::get<Word>(syl)) k.push_back(x.order_key());
      }
      k.push_back(-3);
    }
    return k;
  }

 private:
  static bool trivial(const Syllable& s) {
    if (const auto* v = std::get_if<Lattice>(&s)) {
      for (auto c : *v)
        if (c != 0) return false;
      return true;
    }
    return std::get<Word>(s).empty();
  }

  // Appends one syllable, merging with the tail and collapsing trivial
  // syllables so that the normal form stays strictly alternating.
  void push(Syllable s) {
    if (trivial(s)) return;
    while (true) {
      if (syllables_.empty() || syllables_.back().index() != s.index()) {
        syllables_.push_back(std::move(s));
        return;
      }
      Syllable last = std::move(syllables_.back());
      syllables_.pop_back();
      if (auto* v = std::get_if<Lattice>(&last)) {
        const auto& w = std::get<Lattice>(s);
        if (v->size() < w.size()) v->resize(w.size(), 0);
        for (std::size_t i = 0; i < w.size(); ++i) (*v)[i] += w[i];
      } else {
        auto& a = std::get<Word>(last);
        const auto& b = std::get<Word>(s);
        a.insert(a.end(), b.begin(), b.end());
        a = free_reduce(a);
      }
      if (!trivial(last)) {
        syllables_.push_back(std::move(last));
        return;
      }
      // The merged syllable vanished: the new tail may now merge with the
      // syllable before it, which is of the other kind, so nothing to do.
      return;
    }
  }

  std::vector<Syllable> syllables_;
};

/// Word-problem model: every generator of a presentation is sent to an
/// element of Z^d * F_k. All relators must map to the identity.
class FreeProductModel {
 public:
  FreeProductModel() = default;
  FreeProductModel(const Presentation& p, std::size_t abelian_rank, std::size_t free_rank,
                   std::vector<GroupElement> images)
      : abelian_rank_(abelian_rank), free_rank_(free_rank), images_(std::move(images)) {
    if (images_.size() != p.generator_count()) throw Error("model must give an image for every generator");
    for (const Word& r : p.relators())
      if (!normal_form(r).is_identity())
        throw Error("relator " + p.format(r) + " is not trivial in the model");
  }

  std::size_t abelian_rank() const { return abelian_rank_; }
  std::size_t free_rank() const { return free_rank_; }
  const std::vector<GroupElement>& images() const { return images_; }

  const GroupElement& image(Letter x) const {
    if (x.gen < 0 || static_cast<std::size_t>(x.gen) >= images_.size()) throw Error("unknown generator in word");
    return images_[static_cast<std::size_t>(x.gen)];
  }

  GroupElement normal_form(const Word& w) const {
    GroupElement g;
    for (Letter x : w) g *= x.sign > 0 ? image(x) : image(x).inverse();
    return g;
  }

  bool is_trivial(const Word& w) const { return normal_form(w).is_identity(); }

  LatticeVector project_z2(const Word& w) const {
    if (abelian_rank_ != 2) throw Error("project_z2 needs a model with abelian rank 2");
    Lattice v = normal_form(w).lattice_part(2);
    return {v[0], v[1]};
  }

  LatticeVector project_z2(const GroupElement& g) const {
    if (abelian_rank_ != 2) throw Error("project_z2 needs a model with abelian rank 2");
    Lattice v = g.lattice_part(2);
    return {v[0], v[1]};
  }

  /// True iff every proper nonempty cyclic subword of r is nontrivial, i.e.
  /// the boundary circuit of the cell lifts to a simple circuit.
  bool cell_embeds(const Word& r) const {
    const std::size_t n = r.size();
    for (std::size_t start = 0; start < n; ++start) {
      GroupElement g;
      for (std::size_t len = 1; len < n; ++len) {
        Letter x = r[(start + len - 1) % n];
        g *= x.sign > 0 ? image(x) : image(x).inverse();
        if (g.is_identity()) return false;
      }
    }
    return true;
  }

 private:
  std::size_t abelian_rank_ = 0;
  std::size_t free_rank_ = 0;
  std::vector<GroupElement> images_;
};

/// Parses an image expression such as `e1 e2^-1 f3 f1^-1` or `1`.
inline GroupElement parse_image_expression(std::string_view text, std::size_t d, std::size_t k) {
  GroupElement g;
  std::istringstream ss{std::string(text)};
  for (std::string tok; ss >> tok;) {
    if (tok == "1") continue;
    if (tok.size() < 2 || (tok[0] != 'e' && tok[0] != 'f')) throw ParseError("bad image token: " + tok);
    long long exp = 1;
    std::string body = tok.substr(1);
    if (auto c = body.find('^'); c != std::string::npos) {
      try {
        exp = std::stoll(body.substr(c + 1));
      } catch (const std::exception&) {
        throw ParseError("bad exponent in " + tok);
      }
      body = body.substr(0, c);
    }
    std::size_t idx = 0;
    try {
      idx = std::stoul(body);
    } catch (const std::exception&) {
      throw ParseError("bad index in " + tok);
    }
    if (tok[0] == 'e') {
      if (idx < 1 || idx > d) throw ParseError("lattice basis index out of range: " + tok);
      Lattice v(d, 0);
      v[idx - 1] = exp;
      g *= GroupElement::lattice(v);
    } else {
      if (idx < 1 || idx > k) throw ParseError("free letter index out of range: " + tok);
      Word w;
      for (long long i = 0; i < (exp < 0 ? -exp : exp); ++i) w.push_back({static_cast<int>(idx - 1), exp < 0 ? -1 : 1});
      g *= GroupElement::free(w);
    }
  }
  return g;
}

/// Reads `abelian_rank d`, `free_rank k`, and `image <gen> = <expr>` lines.
inline FreeProductModel parse_model(std::istream& in, const Presentation& p) {
  std::optional<std::size_t> d, k;
  std::vector<std::optional<GroupElement>> images(p.generator_count());
  std::vector<std::string> pending;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ss(line);
    std::string key;
    if (!(ss >> key)) continue;
    if (key == "abelian_rank") {
      std::size_t v;
      if (!(ss >> v)) throw ParseError("abelian_rank needs a value");
      d = v;
    } else if (key == "free_rank") {
      std::size_t v;
      if (!(ss >> v)) throw ParseError("free_rank needs a value");
      k = v;
    } else if (key == "image") {
      pending.push_back(line);
    } else {
      throw ParseError("unknown model key: " + key);
    }
  }
  if (!d || !k) throw ParseError("model needs abelian_rank and free_rank");
  for (const auto& l : pending) {
    auto eq = l.find('=');
    if (eq == std::string::npos) throw ParseError("image line needs '='");
    std::istringstream head(l.substr(0, eq));
    std::string kw, gen;
    head >> kw >> gen;
    int g = p.alphabet().find(gen);
    if (g < 0) throw ParseError("image for unknown generator " + gen);
    images[static_cast<std::size_t>(g)] = parse_image_expression(l.substr(eq + 1), *d, *k);
  }
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw ParseError("no image for generator " + p.alphabet().name(static_cast<int>(i)));
    out.push_back(*images[i]);
  }
  return FreeProductModel(p, *d, *k, std::move(out));
}

inline FreeProductModel parse_model(const std::string& text, const Presentation& p) {
  std::istringstream in(text);
  return parse_model(in, p);
}

}  // namespace dehn
