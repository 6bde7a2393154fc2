#include "asphere/complex2.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "asphere/error.hpp"

namespace asphere {

  namespace {
    std::size_t start_of(std::vector<Edge> const& edges, Letter const& l) {
      auto const& e = edges[l.index - 1];
      return l.sign > 0 ? e.source : e.target;
    }
    std::size_t end_of(std::vector<Edge> const& edges, Letter const& l) {
      auto const& e = edges[l.index - 1];
      return l.sign > 0 ? e.target : e.source;
    }
  }  // namespace

  TwoComplex::TwoComplex(std::size_t              vertices,
                         std::vector<Edge>        edges,
                         std::vector<Word>        faces,
                         std::vector<std::string> edge_labels)
      : _vertices(vertices),
        _edges(std::move(edges)),
        _faces(std::move(faces)),
        _edge_labels(std::move(edge_labels)) {
    if (!_edge_labels.empty() && _edge_labels.size() != _edges.size()) {
      throw Error(ErrorKind::InvalidComplex, "edge label count mismatch");
    }
    for (std::size_t e = 0; e < _edges.size(); ++e) {
      auto const& edge = _edges[e];
      if (edge.source == 0 || edge.source > _vertices || edge.target == 0
          || edge.target > _vertices) {
        throw Error(ErrorKind::InvalidComplex,
                    "edge " + std::to_string(e + 1)
                        + " has an endpoint outside the vertex set");
      }
    }
    for (std::size_t f = 0; f < _faces.size(); ++f) {
      Word const& w = _faces[f];
      for (auto const& l : w) {
        if (l.index > _edges.size()) {
          throw Error(ErrorKind::InvalidComplex,
                      "face " + std::to_string(f + 1) + " uses missing edge "
                          + std::to_string(l.index));
        }
      }
      for (std::size_t k = 0; k < w.size(); ++k) {
        Letter const& next = w[(k + 1) % w.size()];
        if (end_of(_edges, w[k]) != start_of(_edges, next)) {
          throw Error(ErrorKind::InvalidComplex,
                      "boundary of face " + std::to_string(f + 1)
                          + " is not a closed edge path");
        }
      }
    }
  }

  TwoComplex TwoComplex::from_presentation(Presentation const& p) {
    std::vector<Edge>        edges(p.generators(), Edge{1, 1});
    std::vector<std::string> labels;
    for (GenIndex i = 1; i <= p.generators(); ++i) {
      labels.push_back(p.generator_name(i));
    }
    return TwoComplex(1, std::move(edges), p.relators(), std::move(labels));
  }

  std::string TwoComplex::edge_label(std::size_t e) const {
    if (e >= 1 && e <= _edge_labels.size()) {
      return _edge_labels[e - 1];
    }
    return "e" + std::to_string(e);
  }

  ChainComplex chain_complex(TwoComplex const& c) {
    ChainComplex cc{SparseIntMatrix(c.edges().size(), c.faces().size()),
                    SparseIntMatrix(c.vertices(), c.edges().size())};
    for (std::size_t f = 1; f <= c.faces().size(); ++f) {
      for (auto const& [e, v] : exponent_vector(c.faces()[f - 1])) {
        cc.d2.set(e, f, v);
      }
    }
    for (std::size_t e = 1; e <= c.edges().size(); ++e) {
      auto const& edge = c.edges()[e - 1];
      if (edge.source != edge.target) {
        cc.d1.add(edge.target, e, 1);
        cc.d1.add(edge.source, e, -1);
      }
    }
    return cc;
  }

  Homology homology(ChainComplex const& cc) {
    std::size_t const rank1 = smith_normal_form(cc.d1).rank();
    auto const        snf2  = smith_normal_form(cc.d2);
    std::size_t const rank2 = snf2.rank();
    std::size_t const V     = cc.d1.rows();
    std::size_t const E     = cc.d2.rows();
    std::size_t const F     = cc.d2.cols();

    Homology h;
    h.h0      = V - rank1;
    h.h1_rank = E - rank1 - rank2;
    for (auto const& d : snf2.diagonal) {
      if (d > 1) {
        h.h1_torsion.push_back(d);
      }
    }
    h.h2  = F - rank2;
    h.chi = static_cast<long long>(V) - static_cast<long long>(E)
            + static_cast<long long>(F);
    return h;
  }

  Homology homology(TwoComplex const& c) {
    return homology(chain_complex(c));
  }

  bool is_homologically_contractible(Homology const& h) {
    return h.h0 == 1 && h.h1_rank == 0 && h.h1_torsion.empty() && h.h2 == 0;
  }

  bool is_homologically_contractible(TwoComplex const& c) {
    return is_homologically_contractible(homology(c));
  }

  ////////////////////////////////////////////////////////////////////////
  // Cell sets
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::set<std::size_t> iota_set(std::size_t n) {
      std::set<std::size_t> s;
      for (std::size_t k = 1; k <= n; ++k) {
        s.insert(k);
      }
      return s;
    }

    template <typename T>
    std::set<T> set_union(std::set<T> const& a, std::set<T> const& b) {
      std::set<T> r = a;
      r.insert(b.begin(), b.end());
      return r;
    }

    template <typename T>
    std::set<T> set_intersection(std::set<T> const& a, std::set<T> const& b) {
      std::set<T> r;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::inserter(r, r.end()));
      return r;
    }

    void check_range(TwoComplex const& c, CellSet const& s) {
      auto const bad = [](std::set<std::size_t> const& cells, std::size_t n) {
        return !cells.empty() && (*cells.begin() == 0 || *cells.rbegin() > n);
      };
      if (bad(s.vertices, c.vertices()) || bad(s.edges, c.edges().size())
          || bad(s.faces, c.faces().size())) {
        throw Error(ErrorKind::InvalidComplex, "cell index outside the complex");
      }
    }
  }  // namespace

  CellSet all_cells(TwoComplex const& c) {
    return CellSet{iota_set(c.vertices()), iota_set(c.edges().size()),
                   iota_set(c.faces().size())};
  }

  bool is_subcomplex(TwoComplex const& c, CellSet const& s) {
    check_range(c, s);
    for (std::size_t e : s.edges) {
      auto const& edge = c.edges()[e - 1];
      if (!s.vertices.contains(edge.source) || !s.vertices.contains(edge.target)) {
        return false;
      }
    }
    for (std::size_t f : s.faces) {
      for (auto const& l : c.faces()[f - 1]) {
        if (!s.edges.contains(l.index)) {
          return false;
        }
      }
    }
    return true;
  }

  bool contains(CellSet const& outer, CellSet const& inner) {
    return std::includes(outer.vertices.begin(), outer.vertices.end(),
                         inner.vertices.begin(), inner.vertices.end())
           && std::includes(outer.edges.begin(), outer.edges.end(),
                            inner.edges.begin(), inner.edges.end())
           && std::includes(outer.faces.begin(), outer.faces.end(),
                            inner.faces.begin(), inner.faces.end());
  }

  CellSet unite(CellSet const& a, CellSet const& b) {
    return CellSet{set_union(a.vertices, b.vertices), set_union(a.edges, b.edges),
                   set_union(a.faces, b.faces)};
  }

  CellSet intersect(CellSet const& a, CellSet const& b) {
    return CellSet{set_intersection(a.vertices, b.vertices),
                   set_intersection(a.edges, b.edges),
                   set_intersection(a.faces, b.faces)};
  }

  CellSet closure(TwoComplex const& c, CellSet s) {
    check_range(c, s);
    for (std::size_t f : s.faces) {
      for (auto const& l : c.faces()[f - 1]) {
        s.edges.insert(l.index);
      }
    }
    for (std::size_t e : s.edges) {
      s.vertices.insert(c.edges()[e - 1].source);
      s.vertices.insert(c.edges()[e - 1].target);
    }
    return s;
  }

  TwoComplex restrict(TwoComplex const& c, CellSet const& s) {
    if (!is_subcomplex(c, s)) {
      throw Error(ErrorKind::InvalidComplex, "cell set is not a subcomplex");
    }
    std::map<std::size_t, std::size_t> vmap, emap;
    for (std::size_t v : s.vertices) {
      vmap[v] = vmap.size() + 1;
    }
    std::vector<Edge>        edges;
    std::vector<std::string> labels;
    for (std::size_t e : s.edges) {
      emap[e] = emap.size() + 1;
      auto const& edge = c.edges()[e - 1];
      edges.push_back(Edge{vmap.at(edge.source), vmap.at(edge.target)});
      if (!c.edge_labels().empty()) {
        labels.push_back(c.edge_label(e));
      }
    }
    std::vector<Word> faces;
    for (std::size_t f : s.faces) {
      std::vector<Letter> raw;
      for (auto const& l : c.faces()[f - 1]) {
        raw.push_back(Letter{static_cast<GenIndex>(emap.at(l.index)), l.sign});
      }
      faces.emplace_back(std::move(raw));
    }
    return TwoComplex(s.vertices.size(), std::move(edges), std::move(faces),
                      std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation subcomplexes
  ////////////////////////////////////////////////////////////////////////

  SubcomplexSpec full_spec(Presentation const& p) {
    return SubcomplexSpec{p.generators(), all_generators(p), all_relators(p)};
  }

  void validate(SubcomplexSpec const& s, Presentation const& p) {
    if (s.ambient_generators != p.generators()) {
      throw Error(ErrorKind::WindowMismatch,
                  "subcomplex is over " + std::to_string(s.ambient_generators)
                      + " generators, presentation has "
                      + std::to_string(p.generators()));
    }
    subpresentation(p, s.generators, s.relators);
  }

  Presentation subcomplex_presentation(Presentation const&   p,
                                       SubcomplexSpec const& s) {
    validate(s, p);
    return subpresentation(p, s.generators, s.relators);
  }

  CellSet cells_of(SubcomplexSpec const& s) {
    CellSet c;
    c.vertices.insert(1);
    c.edges.insert(s.generators.begin(), s.generators.end());
    c.faces = s.relators;
    return c;
  }

  SubcomplexSpec onefull_hull(SubcomplexSpec const& s) {
    SubcomplexSpec hull = s;
    for (GenIndex i = 1; i <= s.ambient_generators; ++i) {
      hull.generators.insert(i);
    }
    return hull;
  }

  Filtration presentation_filtration(Presentation const&                p,
                                     std::vector<SubcomplexSpec> const& stages) {
    Filtration f{TwoComplex::from_presentation(p), {}, {}};
    for (auto const& s : stages) {
      validate(s, p);
      f.stages.push_back(cells_of(s));
    }
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Telescope
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class TelescopeBuilder {
     public:
      explicit TelescopeBuilder(TwoComplex const& base) : _base(base) {}

      // Literal copy of stage 0; its cells become the home copies.
      CellSet copy_stage0(CellSet const& s) {
        CellSet out;
        for (std::size_t v : s.vertices) {
          _home_v[v] = new_vertex();
          out.vertices.insert(_home_v[v]);
        }
        for (std::size_t e : s.edges) {
          auto const& edge = _base.edges()[e - 1];
          _home_e[e] = new_edge(_home_v.at(edge.source), _home_v.at(edge.target),
                                _base.edge_label(e));
          out.edges.insert(_home_e[e]);
        }
        for (std::size_t f : s.faces) {
          out.faces.insert(new_face(_base.faces()[f - 1], _home_e));
        }
        return out;
      }

      Collar attach(std::size_t stage, CellSet const& piece, CellSet const& gamma) {
        std::map<std::size_t, std::size_t> copy_v, copy_e;
        std::string const                  tag = "@" + std::to_string(stage);
        for (std::size_t v : piece.vertices) {
          copy_v[v] = new_vertex();
        }
        for (std::size_t e : piece.edges) {
          auto const& edge = _base.edges()[e - 1];
          copy_e[e]        = new_edge(copy_v.at(edge.source), copy_v.at(edge.target),
                               _base.edge_label(e) + tag);
        }
        for (std::size_t f : piece.faces) {
          new_face(_base.faces()[f - 1], copy_e);
        }

        // gamma x [0, 1]: gamma x 0 follows the home copies, gamma x 1 is the copy in J.
        std::map<std::size_t, std::size_t> vertical;
        for (std::size_t v : gamma.vertices) {
          vertical[v] = new_edge(_home_v.at(v), copy_v.at(v),
                                 "v" + std::to_string(v) + tag + "x");
          _link[copy_v.at(v)] = vertical[v];
        }
        for (std::size_t e : gamma.edges) {
          auto const&       edge = _base.edges()[e - 1];
          std::size_t const diag = new_edge(_home_v.at(edge.source),
                                            copy_v.at(edge.target),
                                            _base.edge_label(e) + tag + "d");
          std::vector<Letter> lower = home_path(e);
          lower.push_back(letter(vertical.at(edge.target), 1));
          lower.push_back(letter(diag, -1));
          add_face(std::move(lower));
          add_face({letter(diag, 1), letter(copy_e.at(e), -1),
                    letter(vertical.at(edge.source), -1)});
        }

        for (std::size_t v : piece.vertices) {
          _home_v.try_emplace(v, copy_v.at(v));
        }
        for (std::size_t e : piece.edges) {
          _home_e.try_emplace(e, copy_e.at(e));
        }

        Collar c;
        c.stage             = stage;
        c.gamma_vertices    = gamma.vertices.size();
        c.gamma_edges       = gamma.edges.size();
        c.cylinder_vertices = 2 * c.gamma_vertices;
        c.cylinder_edges    = 3 * c.gamma_edges + c.gamma_vertices;
        c.cylinder_faces    = 2 * c.gamma_edges;
        return c;
      }

      TwoComplex build() {
        return TwoComplex(_vertices, std::move(_edges), std::move(_faces),
                          std::move(_labels));
      }

     private:
      // The home copy of e may sit on later copies of its endpoints; those
      // are joined to the home vertices by vertical edges, which gives a
      // path from home(source) to home(target) collapsing onto e.
      std::vector<Letter> home_path(std::size_t e) const {
        std::size_t const   h = _home_e.at(e);
        Edge const&         run = _edges[h - 1];
        std::vector<Letter> path;
        if (auto it = _link.find(run.source); it != _link.end()) {
          path.push_back(letter(it->second, 1));
        }
        path.push_back(letter(h, 1));
        if (auto it = _link.find(run.target); it != _link.end()) {
          path.push_back(letter(it->second, -1));
        }
        return path;
      }

      static Letter letter(std::size_t e, int sign) {
        return Letter{static_cast<GenIndex>(e), sign};
      }

      std::size_t new_vertex() {
        return ++_vertices;
      }

      std::size_t new_edge(std::size_t s, std::size_t t, std::string label) {
        _edges.push_back(Edge{s, t});
        _labels.push_back(std::move(label));
        return _edges.size();
      }

      std::size_t new_face(Word const&                               w,
                           std::map<std::size_t, std::size_t> const& emap) {
        std::vector<Letter> raw;
        for (auto const& l : w) {
          raw.push_back(letter(emap.at(l.index), l.sign));
        }
        return add_face(std::move(raw));
      }

      std::size_t add_face(std::vector<Letter> raw) {
        _faces.emplace_back(std::move(raw));
        return _faces.size();
      }

      TwoComplex const&                  _base;
      std::size_t                        _vertices = 0;
      std::vector<Edge>                  _edges;
      std::vector<std::string>           _labels;
      std::vector<Word>                  _faces;
      std::map<std::size_t, std::size_t> _home_v, _home_e;
      // Telescope vertex -> vertical edge reaching it from the home vertex.
      std::map<std::size_t, std::size_t> _link;
    };
  }  // namespace

  Telescope telescope(Filtration const& f) {
    TwoComplex const& base = f.complex;
    if (f.stages.empty()) {
      throw Error(ErrorKind::InvalidComplex, "filtration has no stages");
    }
    if (!f.pieces.empty() && f.pieces.size() + 1 != f.stages.size()) {
      throw Error(ErrorKind::InvalidComplex,
                  "expected one piece per stage after the first");
    }
    for (std::size_t i = 0; i < f.stages.size(); ++i) {
      CellSet const& s = f.stages[i];
      if (!is_subcomplex(base, s)) {
        throw Error(ErrorKind::InvalidComplex,
                    "stage " + std::to_string(i) + " is not a subcomplex");
      }
      if (i > 0 && !contains(s, f.stages[i - 1])) {
        throw Error(ErrorKind::InvalidComplex,
                    "stage " + std::to_string(i) + " does not contain stage "
                        + std::to_string(i - 1));
      }
      if (homology(restrict(base, s)).h0 != 1) {
        throw Error(ErrorKind::InvalidComplex,
                    "stage " + std::to_string(i) + " is not connected");
      }
    }
    if (!(f.stages.back() == all_cells(base))) {
      throw Error(ErrorKind::InvalidComplex,
                  "last stage is not the whole complex");
    }

    TelescopeBuilder builder(base);
    Telescope        result;
    result.stage0 = builder.copy_stage0(f.stages.front());
    for (std::size_t i = 1; i < f.stages.size(); ++i) {
      CellSet const& prev = f.stages[i - 1];
      CellSet const& curr = f.stages[i];
      CellSet        piece;
      if (f.pieces.empty()) {
        CellSet fresh;
        for (std::size_t v : curr.vertices) {
          if (!prev.vertices.contains(v)) {
            fresh.vertices.insert(v);
          }
        }
        for (std::size_t e : curr.edges) {
          if (!prev.edges.contains(e)) {
            fresh.edges.insert(e);
          }
        }
        for (std::size_t fc : curr.faces) {
          if (!prev.faces.contains(fc)) {
            fresh.faces.insert(fc);
          }
        }
        piece = closure(base, fresh);
      } else {
        piece = f.pieces[i - 1];
        if (!is_subcomplex(base, piece) || !(unite(prev, piece) == curr)) {
          throw Error(ErrorKind::InvalidComplex,
                      "piece " + std::to_string(i)
                          + " does not complete stage " + std::to_string(i - 1)
                          + " to stage " + std::to_string(i));
        }
      }
      CellSet const gamma = intersect(prev, piece);
      if (!gamma.faces.empty()) {
        throw Error(ErrorKind::NotAGraph,
                    "intersection at stage " + std::to_string(i) + " contains "
                        + std::to_string(gamma.faces.size()) + " face(s)");
      }
      result.collars.push_back(builder.attach(i, piece, gamma));
    }
    result.complex = builder.build();
    return result;
  }

}  // namespace asphere
