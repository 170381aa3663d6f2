#pragma once

#include "proxrem/bounds.hpp"
#include "proxrem/construction.hpp"
#include "proxrem/errors.hpp"
#include "proxrem/extremal.hpp"
#include "proxrem/families.hpp"
#include "proxrem/graph.hpp"
#include "proxrem/invariants.hpp"
#include "proxrem/oracle.hpp"
#include "proxrem/rational.hpp"
#include "proxrem/weighted.hpp"
