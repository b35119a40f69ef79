#pragma once

#include "pct/allowable.hpp"
#include "pct/binary_tree.hpp"
#include "pct/core.hpp"
#include "pct/dyck.hpp"
#include "pct/error.hpp"
#include "pct/hecke.hpp"
#include "pct/tableau.hpp"
