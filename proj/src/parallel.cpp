#include "mbfix/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace mbfix {

namespace {

int initial_threads() {
    if (const char* env = std::getenv("MBF_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

std::atomic<int>& threads_setting() {
    static std::atomic<int> value{initial_threads()};
    return value;
}

}  // namespace

int thread_count() { return threads_setting().load(); }

void set_thread_count(int threads) { threads_setting().store(std::max(1, threads)); }

int chunk_count(std::size_t count) {
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(thread_count()), std::max<std::size_t>(count, 1)));
}

void parallel_chunks(std::size_t count,
                     const std::function<void(int worker, std::size_t begin, std::size_t end)>& body) {
    const int workers = chunk_count(count);
    auto bounds = [&](int w) { return count * static_cast<std::size_t>(w) / static_cast<std::size_t>(workers); };
    if (workers == 1) {
        body(0, 0, count);
        return;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    body(w, bounds(w), bounds(w + 1));
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace mbfix
