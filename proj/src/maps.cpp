#include "cubical/maps.hpp"

#include <map>
#include <set>

namespace cubical {

namespace {

struct LinkImage {
  Link src, dst;
  std::vector<int> v, e, t;  // index of the image simplex in dst, -1 if missing
};

using Key = std::pair<int, int>;

template <class Src>
std::vector<int> map_simplices(const CubicalMap& f, const std::vector<Coface>& from, const Src& to) {
  std::map<Key, int> index;
  for (int j = 0; j < static_cast<int>(to.size()); ++j) index[{to[j].cell, to[j].pos.code()}] = j;
  std::vector<int> out;
  for (const Coface& c : from) {
    const Image& im = f.at(c.dim, c.cell);
    auto it = im.cell < 0 ? index.end() : index.find({im.cell, im.sym.apply(c.pos).code()});
    out.push_back(it == index.end() ? -1 : it->second);
  }
  return out;
}

LinkImage link_image(const CubicalMap& f, const Incidence& inX, const Incidence& inY, int x) {
  LinkImage r;
  r.src = link(*f.domain(), inX, {0, x});
  r.dst = link(*f.codomain(), inY, {0, f.at(0, x).cell});
  r.v = map_simplices(f, r.src.vertex_src, r.dst.vertex_src);
  r.e = map_simplices(f, r.src.edge_src, r.dst.edge_src);
  r.t = map_simplices(f, r.src.triangle_src, r.dst.triangle_src);
  return r;
}

// First pair of source simplices with the same image, as labels.
std::vector<std::string> collision(const std::vector<int>& img, const std::vector<std::string>& labels) {
  std::map<int, int> seen;
  for (int j = 0; j < static_cast<int>(img.size()); ++j) {
    if (img[j] < 0) return {labels[j]};
    auto [it, fresh] = seen.emplace(img[j], j);
    if (!fresh) return {labels[it->second], labels[j]};
  }
  return {};
}

Verdict immersion_at(const CubicalMap& f, const LinkImage& li, const std::string& xid) {
  const char* what[] = {"link vertices", "link edges", "link triangles"};
  const std::vector<std::string>* labels[] = {&li.src.vertices, &li.src.edge_labels, &li.src.triangle_labels};
  const std::vector<int>* imgs[] = {&li.v, &li.e, &li.t};
  for (int k = 0; k < 3; ++k) {
    auto w = collision(*imgs[k], *labels[k]);
    if (w.empty()) continue;
    std::string reason = w.size() == 1 ? std::string("image of ") + what[k] + " is not in the target link"
                                       : std::string(what[k]) + " are identified";
    return {false, xid, reason, w};
  }
  (void)f;
  return {};
}

}  // namespace

Verdict is_immersion(const CubicalMap& f) {
  const CubeComplex& X = *f.domain();
  Incidence inX(X), inY(*f.codomain());
  for (int x = 0; x < X.count(0); ++x) {
    if (f.at(0, x).cell < 0) return {false, X.id(0, x), "0-cube has no image", {}};
    Verdict v = immersion_at(f, link_image(f, inX, inY, x), X.id(0, x));
    if (!v.ok) return v;
  }
  return {};
}

Verdict is_local_isometry(const CubicalMap& f) {
  const CubeComplex& X = *f.domain();
  Incidence inX(X), inY(*f.codomain());
  for (int x = 0; x < X.count(0); ++x) {
    if (f.at(0, x).cell < 0) return {false, X.id(0, x), "0-cube has no image", {}};
    LinkImage li = link_image(f, inX, inY, x);
    Verdict v = immersion_at(f, li, X.id(0, x));
    if (!v.ok) return v;
    std::map<int, int> pre;  // target link vertex -> source link vertex
    for (int j = 0; j < static_cast<int>(li.v.size()); ++j) pre.emplace(li.v[j], j);
    std::set<int> hit_e(li.e.begin(), li.e.end()), hit_t(li.t.begin(), li.t.end());
    for (int k = 0; k < static_cast<int>(li.dst.edges.size()); ++k) {
      auto [a, b] = li.dst.edges[k];
      if (!pre.count(a) || !pre.count(b) || hit_e.count(k)) continue;
      return {false, X.id(0, x), "missing square",
              {X.id(1, li.src.vertex_src[pre[a]].cell), X.id(1, li.src.vertex_src[pre[b]].cell)}};
    }
    for (int k = 0; k < static_cast<int>(li.dst.triangles.size()); ++k) {
      auto vs = li.dst.triangle_vertices(k);
      if (!pre.count(vs[0]) || !pre.count(vs[1]) || !pre.count(vs[2]) || hit_t.count(k)) continue;
      std::vector<std::string> w;
      for (int u : vs) w.push_back(X.id(1, li.src.vertex_src[pre[u]].cell));
      return {false, X.id(0, x), "missing 3-cube", w};
    }
  }
  return {};
}

Verdict is_locally_convex(const CubeComplex& X, const Subcomplex& A) {
  Incidence inc(X);
  for (int x = 0; x < X.count(0); ++x) {
    if (!A.has(0, x)) continue;
    Link L = link(X, inc, {0, x});
    auto in = [&](int j) { return A.has(1, L.vertex_src[j].cell); };
    for (int k = 0; k < static_cast<int>(L.edges.size()); ++k) {
      auto [a, b] = L.edges[k];
      if (in(a) && in(b) && !A.has(2, L.edge_src[k].cell))
        return {false, X.id(0, x), "square corner missing from the subcomplex",
                {X.id(2, L.edge_src[k].cell), X.id(1, L.vertex_src[a].cell), X.id(1, L.vertex_src[b].cell)}};
    }
    for (int k = 0; k < static_cast<int>(L.triangles.size()); ++k) {
      auto vs = L.triangle_vertices(k);
      if (in(vs[0]) && in(vs[1]) && in(vs[2]) && !A.has(3, L.triangle_src[k].cell))
        return {false, X.id(0, x), "3-cube corner missing from the subcomplex", {X.id(3, L.triangle_src[k].cell)}};
    }
  }
  return {};
}

PartialLocalIsometry restrict_map(const CubicalMap& self_map, const Subcomplex& domain) {
  Extracted ex = extract(self_map.domain(), domain);
  CubicalMap m = compose(ex.inclusion, self_map);
  return {self_map.codomain(), domain, m};
}

std::vector<std::string> validate_partial_local_isometry(const PartialLocalIsometry& phi) {
  std::vector<std::string> out;
  const CubeComplex& Y = *phi.ambient;
  auto issues = check_map(phi.map);
  for (const auto& i : issues) out.push_back("not a cubical map at " + i.cell + ": " + i.message);
  if (!issues.empty()) return out;
  if (!is_injective(phi.map)) out.push_back("map is not injective");
  if (!is_closed(Y, phi.domain)) out.push_back("domain is not a subcomplex");
  if (!is_connected(Y, phi.domain)) out.push_back("domain is not connected");
  auto say = [&](const char* what, const Verdict& v) {
    if (v.ok) return;
    std::string s = std::string(what) + " at " + v.center + ": " + v.reason;
    for (std::size_t k = 0; k < v.witness.size(); ++k) s += (k ? ", " : " (") + v.witness[k];
    if (!v.witness.empty()) s += ")";
    out.push_back(s);
  };
  say("domain is not locally convex", is_locally_convex(Y, phi.domain));
  say("image is not locally convex", is_locally_convex(Y, image_of(phi.map)));
  say("map is not a local isometry", is_local_isometry(phi.map));
  return out;
}

bool is_automorphism(const CubicalMap& f) {
  if (f.domain() != f.codomain() && !(*f.domain() == *f.codomain())) return false;
  if (!check_map(f).empty()) return false;
  auto g = inverse(f);
  return g && check_map(*g).empty();
}

}  // namespace cubical
