// Walks the degeneration graph from the balanced seed down to the most
// lopsided pair, printing the root configuration at every step.
#include <cstdio>
#include <string>

#include <k3deg/degen.hpp>

int main() {
    using namespace k3deg::degen;

    State st = seed_state();
    for (int step = 0;; ++step) {
        auto gamma = classify_gamma(st);
        std::string g;
        for (const auto& part : gamma) {
            if (!g.empty()) g += "+";
            g += part;
        }
        std::printf("step %2d  K^2 (%3d,%3d)  %s\n", step, st.sides[0].k2,
                    st.sides[1].k2, g.c_str());

        // Always flop out of the shrinking side; stop once nothing on
        // that side can move.
        auto cands = eligible(st, 1);
        if (cands.empty()) break;
        flop(st, 1, cands.front());
    }
    return 0;
}
