#pragma once

#include "macs/asymptotics.hpp"
#include "macs/bigint.hpp"
#include "macs/codec.hpp"
#include "macs/counting.hpp"
#include "macs/enumeration.hpp"
#include "macs/error.hpp"
#include "macs/poset.hpp"
#include "macs/reference_tables.hpp"
#include "macs/render.hpp"
