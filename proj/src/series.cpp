#include "gln/parallel.hpp"
#include "gln/series.hpp"

#include <cstdlib>
#include <string>

namespace gln {

std::string exps_str(const Exps& e) {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

int thread_count() {
    if (const char* v = std::getenv("GLN_THREADS")) {
        int n = std::atoi(v);
        if (n >= 1) return n;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? (int)h : 1;
}

}  // namespace gln
