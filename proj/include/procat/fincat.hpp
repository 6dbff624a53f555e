#pragma once

#include "procat/error.hpp"
#include "procat/fincat/catalog.hpp"
#include "procat/fincat/diagram.hpp"
#include "procat/fincat/directed.hpp"
#include "procat/fincat/factorization.hpp"
#include "procat/fincat/fin_set_map.hpp"
#include "procat/fincat/finite_category.hpp"
#include "procat/fincat/finite_poset.hpp"
#include "procat/fincat/limit.hpp"
