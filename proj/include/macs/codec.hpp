#pragma once

#include "macs/alignment.hpp"
#include "macs/duality.hpp"
#include "macs/walk.hpp"
#include "macs/word.hpp"
