use std::time::{Duration, Instant};

/// Wall-clock allowance for a search. Exhausting it is reported as its own
/// outcome and never as "none found".
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Budget {
    limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { limit: None }
    }

    pub fn seconds(secs: f64) -> Self {
        Budget {
            limit: Some(Duration::from_secs_f64(secs.max(0.0))),
        }
    }

    pub fn limit(&self) -> Option<Duration> {
        self.limit
    }

    pub fn start(&self) -> Deadline {
        Deadline {
            end: self.limit.map(|d| Instant::now() + d),
            ticks: 0,
            expired: false,
        }
    }
}

#[derive(Debug)]
pub struct Deadline {
    end: Option<Instant>,
    ticks: u32,
    expired: bool,
}

impl Deadline {
    /// Cheap to call in inner loops; the clock is read every 256 ticks.
    pub fn expired(&mut self) -> bool {
        if self.expired {
            return true;
        }
        let Some(end) = self.end else { return false };
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(256) && Instant::now() >= end {
            self.expired = true;
        }
        self.expired
    }

    pub fn has_expired(&self) -> bool {
        self.expired
    }
}
