// Regenerates the normal basis context shipped in data/: searches for a
// self-dual low-complexity basis with a fixed seed and prints the versioned
// ctx file to stdout.

#include <cstdio>
#include <string>

#include "rankdec/gf127_normal.hpp"
#include "rankdec/nb_build.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 1;
    if (argc > 1) seed = std::stoull(argv[1]);
    rankdec::NormalBasisCtx ctx = rankdec::build_normal_basis(seed);
    std::fputs(rankdec::nb_ctx_serialize(ctx).c_str(), stdout);
    std::fprintf(stderr, "C_M = %d, self-dual = %d\n", ctx.complexity, int(ctx.self_dual));
    return 0;
}
