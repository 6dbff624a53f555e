#pragma once

#include "procat/graded/a_index.hpp"
#include "procat/graded/eh_demo.hpp"
#include "procat/graded/graded_poset.hpp"
#include "procat/graded/increasing_map.hpp"
#include "procat/graded/posets.hpp"
#include "procat/graded/product.hpp"
