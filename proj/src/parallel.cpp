#include "hyperquad/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hyperquad {

int resolve_threads(int requested) {
    if (requested < 0)
        throw std::invalid_argument("thread count cannot be negative");
    if (requested > 0)
        return requested;
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1)
        hw = 1;
    if (const char* env = std::getenv("HYPERQUAD_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap > 0)
                hw = std::min(hw, cap);
        } catch (const std::exception&) {
            // Unparseable values are ignored.
        }
    }
    return hw;
}

void parallel_blocks(std::size_t total, int threads,
                     const std::function<void(int, std::size_t, std::size_t)>& fn) {
    const std::size_t workers =
        std::min(static_cast<std::size_t>(resolve_threads(threads)), std::max<std::size_t>(total, 1));
    if (workers <= 1 || total == 0) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(total, begin + chunk);
        if (begin >= end)
            break;
        pool.emplace_back([&, w, begin, end]() {
            try {
                fn(static_cast<int>(w), begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool)
        t.join();
    for (const std::exception_ptr& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace hyperquad
