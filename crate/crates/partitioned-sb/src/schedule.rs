//! Per-chip, per-ring streaming schedule: what each chip consumes and sends,
//! in which element order, generalizing the four-chip picture to any
//! `P_chip`.
//!
//! Consumption on each ring starts with the chip's own subvector (phase A,
//! hiding the first-hop latency), then follows arrival order (phase B):
//! from each successive hop the neighbor-ring subvector first, then the
//! opposite-ring one in reversed element order. Sends start with the own
//! subvector for the ring, then the own subvector of the opposite ring
//! replayed in reverse (the `R_buf` rule), then forwards of the first
//! `P_chip - 3` received subvectors. Each chip therefore transmits
//! `P_chip - 1` subvectors per ring and receives `P_chip - 1` per ring, and
//! every subvector reaches every chip exactly once within
//! `N_hop = ceil((P_chip-1)/2)` hops.

use serde::Serialize;

use crate::partition::{Partition, Ring, SubvectorId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Phase {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementOrder {
    Forward,
    Reversed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Source {
    #[serde(rename = "self")]
    Own,
    #[serde(rename = "received")]
    Received,
}

/// One subvector consumption slot of a chip's MM stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConsumeEntry {
    pub phase: Phase,
    pub subvector: SubvectorId,
    pub order: ElementOrder,
    pub source: Source,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SendKind {
    /// The chip's own subvector for this ring, streamed as produced.
    Own,
    /// The own subvector of the opposite ring, replayed in reverse from R_buf.
    Rbuf,
    /// A received subvector forwarded onward unchanged.
    Forward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SendEntry {
    pub subvector: SubvectorId,
    pub order: ElementOrder,
    pub kind: SendKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChipRingSchedule {
    pub consume: Vec<ConsumeEntry>,
    pub send: Vec<SendEntry>,
}

/// The full schedule, indexed by chip then ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSchedule {
    p_chip: usize,
    per_chip: Vec<[ChipRingSchedule; 2]>,
}

impl RingSchedule {
    pub fn p_chip(&self) -> usize {
        self.p_chip
    }

    pub fn chip_ring(&self, chip: usize, ring: Ring) -> &ChipRingSchedule {
        &self.per_chip[chip][ring.index()]
    }

    /// Number of hops in the all-to-all exchange, `ceil((P_chip-1)/2)`.
    pub fn n_hop(&self) -> usize {
        self.p_chip.saturating_sub(1).div_ceil(2)
    }

    /// Chip whose sends this chip receives on the given ring.
    pub fn upstream(&self, chip: usize, ring: Ring) -> usize {
        match ring {
            Ring::L => (chip + 1) % self.p_chip,
            Ring::R => (chip + self.p_chip - 1) % self.p_chip,
        }
    }

    /// Chip this chip sends to on the given ring.
    pub fn downstream(&self, chip: usize, ring: Ring) -> usize {
        self.upstream(chip, ring.opposite())
    }
}

/// Build the streaming schedule for a partition.
pub fn build_ring_schedule(partition: &Partition) -> RingSchedule {
    let p = partition.p_chip();
    let per_chip = (0..p)
        .map(|c| [chip_ring(c, Ring::L, p), chip_ring(c, Ring::R, p)])
        .collect();
    RingSchedule { p_chip: p, per_chip }
}

fn chip_ring(chip: usize, ring: Ring, p: usize) -> ChipRingSchedule {
    // On RingL chip c hears from chips c+1, c+2, ...; on RingR from c-1, c-2.
    let hop_chip = |k: usize| match ring {
        Ring::L => (chip + k) % p,
        Ring::R => (chip + p - k % p) % p,
    };

    let mut consume = vec![ConsumeEntry {
        phase: Phase::A,
        subvector: SubvectorId::new(chip, ring),
        order: ElementOrder::Forward,
        source: Source::Own,
    }];
    let mut k = 1;
    while consume.len() < p {
        let origin = hop_chip(k);
        consume.push(ConsumeEntry {
            phase: Phase::B,
            subvector: SubvectorId::new(origin, ring),
            order: ElementOrder::Forward,
            source: Source::Received,
        });
        if consume.len() < p {
            consume.push(ConsumeEntry {
                phase: Phase::B,
                subvector: SubvectorId::new(origin, ring.opposite()),
                order: ElementOrder::Reversed,
                source: Source::Received,
            });
        }
        k += 1;
    }

    let mut send = Vec::new();
    if p >= 2 {
        send.push(SendEntry {
            subvector: SubvectorId::new(chip, ring),
            order: ElementOrder::Forward,
            kind: SendKind::Own,
        });
    }
    if p >= 3 {
        send.push(SendEntry {
            subvector: SubvectorId::new(chip, ring.opposite()),
            order: ElementOrder::Reversed,
            kind: SendKind::Rbuf,
        });
        for entry in &consume[1..p - 2] {
            send.push(SendEntry {
                subvector: entry.subvector,
                order: entry.order,
                kind: SendKind::Forward,
            });
        }
    }

    ChipRingSchedule { consume, send }
}

/// Global column indices of a consumed subvector, in processed element order.
pub fn stream_columns(partition: &Partition, entry: &ConsumeEntry) -> Vec<usize> {
    let range = partition.range(entry.subvector);
    match entry.order {
        ElementOrder::Forward => range.collect(),
        ElementOrder::Reversed => range.rev().collect(),
    }
}

/// JSON dump of the schedule for golden-file comparison.
pub fn schedule_to_json(schedule: &RingSchedule) -> serde_json::Value {
    let chips: Vec<serde_json::Value> = (0..schedule.p_chip())
        .map(|c| {
            serde_json::json!({
                "chip": c,
                "ringL": schedule.chip_ring(c, Ring::L),
                "ringR": schedule.chip_ring(c, Ring::R),
            })
        })
        .collect();
    serde_json::json!({ "p_chip": schedule.p_chip(), "chips": chips })
}
