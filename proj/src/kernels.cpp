#include "cdopt/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace cdopt::kernels {

const Ops& active() {
    static const Ops* chosen = [] {
        const char* env = std::getenv("CDOPT_KERNELS");
#if defined(__x86_64__) && defined(__GNUC__)
        if (env && std::strcmp(env, "scalar") == 0) return &scalar();
        if (env && std::strcmp(env, "avx2") == 0 && avx2_supported()) return &avx2();
        if (avx2_supported()) return &avx2();
#else
        (void)env;
#endif
        return &scalar();
    }();
    return *chosen;
}

std::vector<const Ops*> available() {
    std::vector<const Ops*> v{&scalar()};
#if defined(__x86_64__) && defined(__GNUC__)
    if (avx2_supported()) v.push_back(&avx2());
#endif
    return v;
}

}
