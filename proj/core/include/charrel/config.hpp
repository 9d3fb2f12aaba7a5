#pragma once

#include <string>

namespace charrel {

struct Config {
    int max_table_n = 25;
    long long enumeration_cap = 10'000'000;
    std::string cache_dir;  // empty disables the on-disk table cache
    int thread_count = 0;   // 0 = hardware concurrency
};

}  // namespace charrel
