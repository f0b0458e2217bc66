#include "solrec/reductions.hpp"

#ifdef SOLREC_HAVE_PLANARITY
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#endif

namespace solrec {

std::optional<bool> is_planar(const Graph& g) {
#ifdef SOLREC_HAVE_PLANARITY
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                              boost::property<boost::vertex_index_t, int>>;
    BoostGraph bg(g.num_vertices());
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
#else
    (void)g;
    return std::nullopt;
#endif
}

}  // namespace solrec
