//! Arena-backed doubly linked list with constant-time move-to-front.
//!
//! Nodes live in a `Vec` and link to each other by index, so handles stay
//! valid for the lifetime of the list and relinking never allocates.

use std::fmt;

const NIL: u32 = u32::MAX;

/// Stable handle to a node of a [`MtfList`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeId(u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NodeId({})", self.0)
    }
}

#[derive(Clone)]
struct Node<T> {
    value: T,
    prev: u32,
    next: u32,
}

#[derive(Clone)]
pub struct MtfList<T> {
    nodes: Vec<Node<T>>,
    head: u32,
    tail: u32,
}

impl<T> MtfList<T> {
    /// Builds a list holding `values` in order. Node `i` holds `values[i]`.
    ///
    /// # Panics
    ///
    /// Panics if there are `u32::MAX` or more values.
    pub fn from_vec(values: Vec<T>) -> Self {
        let n = values.len();
        assert!(n < NIL as usize, "MtfList holds fewer than u32::MAX nodes");
        let nodes = values
            .into_iter()
            .enumerate()
            .map(|(i, value)| Node {
                value,
                prev: if i == 0 { NIL } else { i as u32 - 1 },
                next: if i + 1 == n { NIL } else { i as u32 + 1 },
            })
            .collect();
        let (head, tail) = if n == 0 {
            (NIL, NIL)
        } else {
            (0, n as u32 - 1)
        };
        Self { nodes, head, tail }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    #[inline]
    pub fn head(&self) -> Option<NodeId> {
        wrap(self.head)
    }

    #[inline]
    pub fn tail(&self) -> Option<NodeId> {
        wrap(self.tail)
    }

    #[inline]
    pub fn next(&self, id: NodeId) -> Option<NodeId> {
        wrap(self.nodes[id.index()].next)
    }

    #[inline]
    pub fn prev(&self, id: NodeId) -> Option<NodeId> {
        wrap(self.nodes[id.index()].prev)
    }

    #[inline]
    pub fn get(&self, id: NodeId) -> &T {
        &self.nodes[id.index()].value
    }

    /// Unlinks `id` and relinks it as the new head.
    pub fn move_to_front(&mut self, id: NodeId) {
        let i = id.0;
        if i == self.head {
            return;
        }
        let Node { prev, next, .. } = self.nodes[i as usize];
        // `i` is not the head, so it has a predecessor.
        self.nodes[prev as usize].next = next;
        if next == NIL {
            self.tail = prev;
        } else {
            self.nodes[next as usize].prev = prev;
        }
        let node = &mut self.nodes[i as usize];
        node.prev = NIL;
        node.next = self.head;
        self.nodes[self.head as usize].prev = i;
        self.head = i;
    }

    /// Values in list order.
    pub fn iter(&self) -> Iter<'_, T> {
        Iter {
            list: self,
            cursor: self.head,
            end: NIL,
        }
    }

    /// Values from the head up to, but excluding, `end` (all values when `end`
    /// is `None`).
    pub fn iter_until(&self, end: Option<NodeId>) -> Iter<'_, T> {
        Iter {
            list: self,
            cursor: self.head,
            end: end.map_or(NIL, |e| e.0),
        }
    }

    /// Consumes the list, returning values in list order.
    pub fn into_ordered_vec(self) -> Vec<T>
    where
        T: Clone,
    {
        self.iter().cloned().collect()
    }
}

impl<T: fmt::Debug> fmt::Debug for MtfList<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

#[inline]
fn wrap(raw: u32) -> Option<NodeId> {
    (raw != NIL).then_some(NodeId(raw))
}

pub struct Iter<'a, T> {
    list: &'a MtfList<T>,
    cursor: u32,
    end: u32,
}

impl<'a, T> Iterator for Iter<'a, T> {
    type Item = &'a T;

    #[inline]
    fn next(&mut self) -> Option<&'a T> {
        if self.cursor == self.end || self.cursor == NIL {
            return None;
        }
        let node = &self.list.nodes[self.cursor as usize];
        self.cursor = node.next;
        Some(&node.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn order(list: &MtfList<i32>) -> Vec<i32> {
        list.iter().copied().collect()
    }

    fn check_links<T>(list: &MtfList<T>) {
        let mut forward = Vec::new();
        let mut cur = list.head();
        while let Some(id) = cur {
            forward.push(id);
            cur = list.next(id);
        }
        let mut backward = Vec::new();
        let mut cur = list.tail();
        while let Some(id) = cur {
            backward.push(id);
            cur = list.prev(id);
        }
        backward.reverse();
        assert_eq!(forward, backward);
        assert_eq!(forward.len(), list.len());
    }

    #[test]
    fn empty_and_singleton() {
        let empty: MtfList<i32> = MtfList::from_vec(vec![]);
        assert!(empty.is_empty());
        assert_eq!(empty.head(), None);
        assert_eq!(empty.iter().count(), 0);

        let mut one = MtfList::from_vec(vec![7]);
        let h = one.head().unwrap();
        one.move_to_front(h);
        assert_eq!(order(&one), vec![7]);
        check_links(&one);
    }

    #[test]
    fn move_middle_and_tail_to_front() {
        let mut list = MtfList::from_vec(vec![0, 1, 2, 3]);
        let ids: Vec<NodeId> = {
            let mut v = Vec::new();
            let mut c = list.head();
            while let Some(id) = c {
                v.push(id);
                c = list.next(id);
            }
            v
        };
        list.move_to_front(ids[2]);
        assert_eq!(order(&list), vec![2, 0, 1, 3]);
        list.move_to_front(ids[3]);
        assert_eq!(order(&list), vec![3, 2, 0, 1]);
        assert_eq!(list.tail(), Some(ids[1]));
        check_links(&list);
        assert_eq!(
            list.iter_until(Some(ids[0])).copied().collect::<Vec<_>>(),
            vec![3, 2]
        );
    }

    proptest! {
        #[test]
        fn move_to_front_matches_vec_model(n in 1usize..40, moves in proptest::collection::vec(0usize..40, 0..60)) {
            let mut list = MtfList::from_vec((0..n as i32).collect());
            let mut model: Vec<i32> = (0..n as i32).collect();
            for m in moves {
                let idx = m % n;
                list.move_to_front(NodeId(idx as u32));
                let pos = model.iter().position(|&v| v == idx as i32).unwrap();
                let v = model.remove(pos);
                model.insert(0, v);
            }
            prop_assert_eq!(order(&list), model);
            check_links(&list);
        }
    }
}
