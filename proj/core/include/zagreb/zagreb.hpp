#pragma once

#include "zagreb/bicyclic.hpp"
#include "zagreb/constructor.hpp"
#include "zagreb/errors.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/moves.hpp"
#include "zagreb/oracle.hpp"
#include "zagreb/sequences.hpp"
