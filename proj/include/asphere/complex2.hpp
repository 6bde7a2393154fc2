#ifndef ASPHERE_COMPLEX2_HPP_
#define ASPHERE_COMPLEX2_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "asphere/freegroup.hpp"
#include "asphere/intlinalg.hpp"
#include "asphere/presentation.hpp"

namespace asphere {

  // Oriented 1-cell between 1-based vertices.
  struct Edge {
    std::size_t source = 1;
    std::size_t target = 1;

    friend bool operator==(Edge const&, Edge const&) = default;
  };

  // CW 2-complex. Face boundaries are words in the edges: letter (e, +1)
  // runs along edge e from source to target, (e, -1) backwards. Every face
  // word is a closed edge path.
  class TwoComplex {
   public:
    TwoComplex() = default;
    TwoComplex(std::size_t              vertices,
               std::vector<Edge>        edges,
               std::vector<Word>        faces,
               std::vector<std::string> edge_labels = {});

    // One vertex, one loop per generator, one face per relator.
    static TwoComplex from_presentation(Presentation const& p);

    std::size_t vertices() const noexcept {
      return _vertices;
    }
    std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }
    std::vector<Word> const& faces() const noexcept {
      return _faces;
    }
    std::vector<std::string> const& edge_labels() const noexcept {
      return _edge_labels;
    }
    std::string edge_label(std::size_t e) const;

    long long euler_characteristic() const noexcept {
      return static_cast<long long>(_vertices)
             - static_cast<long long>(_edges.size())
             + static_cast<long long>(_faces.size());
    }

    friend bool operator==(TwoComplex const& a, TwoComplex const& b) {
      return a._vertices == b._vertices && a._edges == b._edges
             && a._faces == b._faces;
    }

   private:
    std::size_t              _vertices = 0;
    std::vector<Edge>        _edges;
    std::vector<Word>        _faces;
    std::vector<std::string> _edge_labels;
  };

  struct ChainComplex {
    SparseIntMatrix d2;  // edges x faces
    SparseIntMatrix d1;  // vertices x edges
  };

  ChainComplex chain_complex(TwoComplex const& c);

  struct Homology {
    std::size_t          h0 = 0;
    std::size_t          h1_rank = 0;
    std::vector<Integer> h1_torsion;  // invariant factors > 1
    std::size_t          h2 = 0;
    long long            chi = 0;

    friend bool operator==(Homology const&, Homology const&) = default;
  };

  Homology homology(TwoComplex const& c);
  // From boundary maps alone; d1 has one row per vertex.
  Homology homology(ChainComplex const& cc);
  // H0 = Z, H1 = 0 and H2 = 0.
  bool is_homologically_contractible(TwoComplex const& c);
  bool is_homologically_contractible(Homology const& h);

  // 1-based cell indices of a subcomplex.
  struct CellSet {
    std::set<std::size_t> vertices;
    std::set<std::size_t> edges;
    std::set<std::size_t> faces;

    friend bool operator==(CellSet const&, CellSet const&) = default;
  };

  CellSet all_cells(TwoComplex const& c);
  bool    is_subcomplex(TwoComplex const& c, CellSet const& s);
  bool    contains(CellSet const& outer, CellSet const& inner);
  CellSet unite(CellSet const& a, CellSet const& b);
  CellSet intersect(CellSet const& a, CellSet const& b);
  // Smallest subcomplex containing the given cells.
  CellSet closure(TwoComplex const& c, CellSet s);

  // The cells of s as a complex on their own, renumbered in increasing order.
  // Throws InvalidComplex if s is not closed.
  TwoComplex restrict(TwoComplex const& c, CellSet const& s);

  // A subcomplex of a presentation complex: generator and relator subsets.
  struct SubcomplexSpec {
    GenIndex              ambient_generators = 0;
    std::set<GenIndex>    generators;
    std::set<std::size_t> relators;

    bool is_1_full() const noexcept {
      return generators.size() == ambient_generators;
    }

    friend bool operator==(SubcomplexSpec const&, SubcomplexSpec const&) = default;
  };

  SubcomplexSpec full_spec(Presentation const& p);
  // Throws DanglingRelator when a relator leaves the generator set.
  void           validate(SubcomplexSpec const& s, Presentation const& p);
  Presentation   subcomplex_presentation(Presentation const&   p,
                                         SubcomplexSpec const& s);
  CellSet        cells_of(SubcomplexSpec const& s);

  // Same relators, all generators: adds the missing loops of the 1-skeleton.
  SubcomplexSpec onefull_hull(SubcomplexSpec const& s);

  // P_0 = stages[0] ⊂ ... ⊂ stages.back() = whole complex. pieces[i-1] is
  // J_i with P_i = P_{i-1} ∪ J_i; left empty, J_i is the closure of the new
  // cells of stage i.
  struct Filtration {
    TwoComplex           complex;
    std::vector<CellSet> stages;
    std::vector<CellSet> pieces;
  };

  struct Collar {
    std::size_t stage          = 0;
    std::size_t gamma_vertices = 0;
    std::size_t gamma_edges    = 0;
    // Cells of gamma x [0, 1] counted on their own.
    std::size_t cylinder_vertices = 0;
    std::size_t cylinder_edges    = 0;
    std::size_t cylinder_faces    = 0;

    long long gamma_chi() const noexcept {
      return static_cast<long long>(gamma_vertices)
             - static_cast<long long>(gamma_edges);
    }
    long long cylinder_chi() const noexcept {
      return static_cast<long long>(cylinder_vertices)
             - static_cast<long long>(cylinder_edges)
             + static_cast<long long>(cylinder_faces);
    }
  };

  struct Telescope {
    TwoComplex          complex;
    // Stage 0 occupies the leading cells of the telescope.
    CellSet             stage0;
    std::vector<Collar> collars;
  };

  // Glues disjoint copies of J_1, J_2, ... onto P_0 along triangulated
  // collars gamma_i x [0, 1], gamma_i = P_{i-1} ∩ J_i. Each rectangle
  // a x [0, 1] is cut by the diagonal from (source, 0) to (target, 1).
  // The 0-end runs along the first copy of each cell; where that copy of an
  // edge sits on later vertex copies it detours through their vertical edges.
  // Throws NotAGraph if some gamma_i has a face.
  Telescope telescope(Filtration const& f);

  Filtration presentation_filtration(Presentation const&                p,
                                     std::vector<SubcomplexSpec> const& stages);

}  // namespace asphere

#endif  // ASPHERE_COMPLEX2_HPP_
