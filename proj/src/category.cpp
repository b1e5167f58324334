#include "ncsing/category.hpp"

#include <set>
#include <tuple>

#include "ncsing/error.hpp"

namespace ncsing {

std::size_t FiniteCategory::compose(std::size_t g, std::size_t f) const {
  const auto it = composition.find({g, f});
  if (it == composition.end()) throw Error(ErrorCode::InvalidArgument, "arrows are not composable");
  return it->second;
}

std::vector<std::size_t> FiniteCategory::hom(std::size_t source, std::size_t target) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].source == source && arrows[a].target == target) out.push_back(a);
  return out;
}

std::vector<std::string> FiniteCategory::checkAxioms() const {
  std::vector<std::string> issues;
  if (identities.size() != objects.size()) {
    issues.emplace_back("identity table size mismatch");
    return issues;
  }
  for (std::size_t x = 0; x < objects.size(); ++x) {
    const auto& id = arrows[identities[x]];
    if (id.source != x || id.target != x) issues.push_back("identity of " + objects[x] + " has wrong ends");
  }
  for (std::size_t f = 0; f < arrows.size(); ++f)
    for (std::size_t g = 0; g < arrows.size(); ++g) {
      const bool composable = arrows[f].target == arrows[g].source;
      const auto it = composition.find({g, f});
      if (composable != (it != composition.end())) {
        issues.push_back("composition table wrong for " + arrows[g].label + " after " + arrows[f].label);
        continue;
      }
      if (!composable) continue;
      const auto& gf = arrows[it->second];
      if (gf.source != arrows[f].source || gf.target != arrows[g].target)
        issues.push_back("composite " + gf.label + " has wrong ends");
    }
  if (!issues.empty()) return issues;
  for (std::size_t f = 0; f < arrows.size(); ++f) {
    if (compose(identities[arrows[f].target], f) != f || compose(f, identities[arrows[f].source]) != f)
      issues.push_back("unit law fails for " + arrows[f].label);
  }
  for (const auto& [gf_key, gf] : composition) {
    const auto [g, f] = gf_key;
    for (std::size_t h = 0; h < arrows.size(); ++h) {
      if (arrows[h].source != arrows[g].target) continue;
      if (compose(h, gf) != compose(compose(h, g), f))
        issues.push_back("associativity fails at " + arrows[h].label + ", " + arrows[g].label + ", " + arrows[f].label);
    }
  }
  return issues;
}

namespace {

std::string vertexLabel(std::size_t v) { return "v" + std::to_string(v); }
std::string flagLabel(std::size_t v, int h) { return "f:v" + std::to_string(v) + ":h" + std::to_string(h); }

}  // namespace

FiniteCategory buildJ(const DecoratedGraph& g) {
  const GraphIndex index(g);
  FiniteCategory c;
  const std::size_t nv = g.vertices.size();
  for (std::size_t v = 0; v < nv; ++v) c.objects.push_back(vertexLabel(v));
  for (std::size_t e = 0; e < g.edges.size(); ++e) c.objects.push_back("e" + std::to_string(e));
  for (std::size_t x = 0; x < c.objects.size(); ++x) {
    c.identities.push_back(c.arrows.size());
    c.arrows.push_back({x, x, "id:" + c.objects[x]});
  }
  for (std::size_t v = 0; v < nv; ++v)
    for (int h : g.vertices[v].halfEdges)
      c.arrows.push_back({v, nv + index.edgeOf(h), "flag:v" + std::to_string(v) + ":h" + std::to_string(h)});
  for (std::size_t f = 0; f < c.arrows.size(); ++f) {
    c.composition[{c.identities[c.arrows[f].target], f}] = f;
    c.composition[{f, c.identities[c.arrows[f].source]}] = f;
  }
  return c;
}

FiniteCategory buildI(const DecoratedGraph& g) {
  const GraphIndex index(g);
  const std::size_t nv = g.vertices.size();

  // Generators carry a word over themselves; composition concatenates words
  // (first-applied first) and cancels adjacent mutually inverse isomorphisms.
  struct Generator {
    std::size_t source, target;
    std::string label;
    std::ptrdiff_t inverse;  // -1 when not an isomorphism generator
  };
  std::vector<Generator> gens;
  FiniteCategory c;
  std::map<int, std::size_t> flagObject;
  for (std::size_t v = 0; v < nv; ++v) c.objects.push_back(vertexLabel(v));
  for (std::size_t v = 0; v < nv; ++v)
    for (int h : g.vertices[v].halfEdges) {
      flagObject[h] = c.objects.size();
      c.objects.push_back(flagLabel(v, h));
    }
  for (std::size_t v = 0; v < nv; ++v)
    for (int h : g.vertices[v].halfEdges)
      gens.push_back({v, flagObject[h], "r:v" + std::to_string(v) + ":h" + std::to_string(h), -1});
  for (std::size_t e : index.compactEdges()) {
    const auto& ce = g.compact(e);
    const auto forward = static_cast<std::ptrdiff_t>(gens.size());
    gens.push_back({flagObject[ce.halfA], flagObject[ce.halfB],
                    "iso:h" + std::to_string(ce.halfA) + ">h" + std::to_string(ce.halfB), forward + 1});
    gens.push_back({flagObject[ce.halfB], flagObject[ce.halfA],
                    "iso:h" + std::to_string(ce.halfB) + ">h" + std::to_string(ce.halfA), forward});
  }

  using Word = std::vector<std::size_t>;
  struct Element {
    std::size_t source, target;
    Word word;
  };
  std::vector<Element> elements;
  std::map<std::tuple<std::size_t, std::size_t, Word>, std::size_t> lookup;
  auto intern = [&](std::size_t s, std::size_t t, Word w) -> std::pair<std::size_t, bool> {
    auto key = std::make_tuple(s, t, w);
    const auto it = lookup.find(key);
    if (it != lookup.end()) return {it->second, false};
    const std::size_t id = elements.size();
    elements.push_back({s, t, std::move(w)});
    lookup.emplace(std::move(key), id);
    return {id, true};
  };
  auto reduce = [&](const Word& a, const Word& b) {
    Word out;
    for (const Word* part : {&a, &b})
      for (std::size_t x : *part) {
        if (!out.empty() && gens[out.back()].inverse == static_cast<std::ptrdiff_t>(x)) {
          out.pop_back();
          continue;
        }
        out.push_back(x);
      }
    return out;
  };

  for (std::size_t x = 0; x < c.objects.size(); ++x) c.identities.push_back(intern(x, x, {}).first);
  for (std::size_t k = 0; k < gens.size(); ++k) intern(gens[k].source, gens[k].target, {k});

  const std::size_t cap = 10 * (c.objects.size() + elements.size());
  std::size_t passes = 0;
  for (bool grew = true; grew;) {
    grew = false;
    if (++passes > cap) throw Error(ErrorCode::SaturationLimit, "composition closure did not terminate");
    const std::size_t n = elements.size();
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t gi = 0; gi < n; ++gi) {
        if (elements[f].target != elements[gi].source) continue;
        if (intern(elements[f].source, elements[gi].target, reduce(elements[f].word, elements[gi].word)).second)
          grew = true;
      }
  }

  for (const auto& el : elements) {
    std::string label;
    if (el.word.empty()) label = "id:" + c.objects[el.source];
    for (std::size_t k : el.word) label = label.empty() ? gens[k].label : gens[k].label + "*" + label;
    c.arrows.push_back({el.source, el.target, std::move(label)});
  }
  for (std::size_t f = 0; f < elements.size(); ++f)
    for (std::size_t gi = 0; gi < elements.size(); ++gi) {
      if (elements[f].target != elements[gi].source) continue;
      const Word w = reduce(elements[f].word, elements[gi].word);
      c.composition[{gi, f}] = lookup.at(std::make_tuple(elements[f].source, elements[gi].target, w));
    }
  return c;
}

CategoryFunctor collapseFunctor(const DecoratedGraph& g, const FiniteCategory& i, const FiniteCategory& j) {
  const GraphIndex index(g);
  const std::size_t nv = g.vertices.size();
  CategoryFunctor functor;

  std::map<std::string, std::size_t> jArrowByLabel;
  for (std::size_t a = 0; a < j.arrows.size(); ++a) jArrowByLabel[j.arrows[a].label] = a;

  std::map<std::string, std::size_t> iObject;
  for (std::size_t x = 0; x < i.objects.size(); ++x) iObject[i.objects[x]] = x;
  functor.onObjects.assign(i.objects.size(), 0);
  for (std::size_t v = 0; v < nv; ++v) {
    functor.onObjects[iObject.at(vertexLabel(v))] = v;
    for (int h : g.vertices[v].halfEdges) functor.onObjects[iObject.at(flagLabel(v, h))] = nv + index.edgeOf(h);
  }

  // Edge isomorphisms go to identities, so an arrow's image is decided by its
  // single restriction generator "r:v<k>:h<m>" if it has one.
  for (const auto& arrow : i.arrows) {
    const auto pos = arrow.label.find("r:v");
    if (pos == std::string::npos) {
      functor.onArrows.push_back(j.identities[functor.onObjects[arrow.target]]);
      continue;
    }
    const auto end = arrow.label.find('*', pos);
    const std::string gen = arrow.label.substr(pos + 2, end == std::string::npos ? std::string::npos : end - pos - 2);
    functor.onArrows.push_back(jArrowByLabel.at("flag:" + gen));
  }
  return functor;
}

}  // namespace ncsing
