#include "tmf/lattice.hpp"

namespace tmf {

namespace {

// E8 as the Cartan matrix of its root system: a chain of seven nodes with
// one branch node, diagonal 2, adjacent pairs -1.
GramLattice make_e8() {
    GramLattice g;
    g.dim = 8;
    g.gram.assign(8, std::vector<long>(8, 0));
    for (int i = 0; i < 8; ++i) g.gram[i][i] = 2;
    const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5},
                            {5, 6}, {6, 7}, {1, 3}};
    for (auto [a, b] : edges) g.gram[a][b] = g.gram[b][a] = -1;
    return g;
}

// D16 plus the glue vector (half-sum class), reduced to a basis.
const long kD16PlusGram[16][16] = {
    {2, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0},
    {0, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1},
    {1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0},
    {1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0},
    {1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0},
    {1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0},
    {1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 0},
    {1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 0},
    {1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 0},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 0},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 0},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 0},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 0},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 0},
    {1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 4, -3},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -3, 4},
};

// Leech lattice from the standard extended-Golay-code construction
// (code vectors / 2 plus the deep-hole glue), basis-reduced.  Minimum
// norm 4: no roots.
const long kLeechGram[24][24] = {
    {4, 0, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 2, 2, 1, 2, 2, 2, 1, 1, 1, -1,
     -1},
    {0, 4, 2, 2, 2, 2, 2, 2, 2, 2, 2, -1, -1, 0, 0, 1, 0, 0, 0, 1, 1, 1, 2,
     -2},
    {2, 2, 4, 2, 2, 2, 2, 2, 2, 2, 2, 1, -1, 1, 2, 2, 1, 2, 2, 2, 1, 1, 1,
     -2},
    {2, 2, 2, 4, 2, 2, 2, 2, 2, 2, 2, 1, -1, 2, 1, 2, 2, 1, 2, 2, 2, 1, 1,
     -2},
    {2, 2, 2, 2, 4, 2, 2, 2, 2, 2, 2, 1, -1, 1, 2, 1, 2, 2, 1, 2, 2, 2, 1,
     -2},
    {2, 2, 2, 2, 2, 4, 2, 2, 2, 2, 2, 1, -1, 1, 1, 2, 1, 2, 2, 1, 2, 2, 1,
     -1},
    {2, 2, 2, 2, 2, 2, 4, 2, 2, 2, 2, 1, -1, 1, 1, 1, 2, 1, 2, 2, 1, 2, 1,
     -1},
    {2, 2, 2, 2, 2, 2, 2, 4, 2, 2, 2, 1, -1, 2, 1, 1, 1, 2, 1, 2, 2, 1, 1,
     -1},
    {2, 2, 2, 2, 2, 2, 2, 2, 4, 2, 2, 1, -1, 2, 2, 1, 1, 1, 2, 1, 2, 2, 1,
     -2},
    {2, 2, 2, 2, 2, 2, 2, 2, 2, 4, 2, 1, -1, 2, 2, 2, 1, 1, 1, 2, 1, 2, 1,
     -1},
    {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 4, 1, -1, 1, 2, 2, 2, 1, 1, 1, 2, 1, 1,
     -1},
    {1, -1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 6, -4, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2,
     0},
    {1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -4, 6, -1, -2, -2, -1, -1,
     -2, -3, -3, -2, -3, 0},
    {2, 0, 1, 2, 1, 1, 1, 2, 2, 2, 1, 3, -1, 4, 2, 2, 2, 2, 2, 2, 2, 2, 1,
     -1},
    {2, 0, 2, 1, 2, 1, 1, 1, 2, 2, 2, 3, -2, 2, 4, 2, 2, 2, 2, 2, 2, 2, 1,
     -1},
    {1, 1, 2, 2, 1, 2, 1, 1, 1, 2, 2, 3, -2, 2, 2, 4, 2, 2, 2, 2, 2, 2, 2,
     -1},
    {2, 0, 1, 2, 2, 1, 2, 1, 1, 1, 2, 3, -1, 2, 2, 2, 4, 2, 2, 2, 2, 2, 1,
     -1},
    {2, 0, 2, 1, 2, 2, 1, 2, 1, 1, 1, 3, -1, 2, 2, 2, 2, 4, 2, 2, 2, 2, 1,
     -1},
    {2, 0, 2, 2, 1, 2, 2, 1, 2, 1, 1, 3, -2, 2, 2, 2, 2, 2, 4, 2, 2, 2, 1,
     -1},
    {1, 1, 2, 2, 2, 1, 2, 2, 1, 2, 1, 3, -3, 2, 2, 2, 2, 2, 2, 4, 2, 2, 2,
     -1},
    {1, 1, 1, 2, 2, 2, 1, 2, 2, 1, 2, 3, -3, 2, 2, 2, 2, 2, 2, 2, 4, 2, 2,
     -1},
    {1, 1, 1, 1, 2, 2, 2, 1, 2, 2, 1, 3, -2, 2, 2, 2, 2, 2, 2, 2, 2, 4, 2,
     -1},
    {-1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, -3, 1, 1, 2, 1, 1, 1, 2, 2, 2, 4,
     -2},
    {-1, -2, -2, -2, -2, -1, -1, -1, -2, -1, -1, 0, 0, -1, -1, -1, -1, -1,
     -1, -1, -1, -1, -2, 4},
};

template <int N>
GramLattice from_array(const long (&a)[N][N]) {
    GramLattice g;
    g.dim = N;
    g.gram.assign(N, std::vector<long>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) g.gram[i][j] = a[i][j];
    return g;
}

GramLattice block_diagonal(const GramLattice& b, int copies) {
    GramLattice g;
    g.dim = b.dim * copies;
    g.gram.assign(g.dim, std::vector<long>(g.dim, 0));
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j)
                g.gram[c * b.dim + i][c * b.dim + j] = b.gram[i][j];
    return g;
}

}  // namespace

GramLattice builtin_lattice(const std::string& name) {
    GramLattice g;
    if (name == "e8") {
        g = make_e8();
    } else if (name == "d16plus") {
        g = from_array(kD16PlusGram);
    } else if (name == "e8cubed") {
        g = block_diagonal(make_e8(), 3);
    } else if (name == "leech") {
        g = from_array(kLeechGram);
    } else {
        throw ParseError("unknown built-in lattice: " + name);
    }
    validate(g);
    return g;
}

}  // namespace tmf
