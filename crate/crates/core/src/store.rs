//! Binary index file.
//!
//! All integers are little-endian. The file is a fixed header, a section
//! table of `(offset, length)` pairs, the sections in table order, and a
//! trailing CRC-64/ECMA-182 over every preceding byte.
//!
//! Header (88 bytes): magic `ISLB`, four zero bytes, then `u64` fields
//! version, flags (bit 0 directed, bit 1 path data, bit 2 stale), `k`,
//! vertex slots, top vertices, top arcs, inserted, deleted, touched labels
//! and the section count.
//!
//! Label offset sections hold `slots + 1` entry indices; label records are
//! `ancestor u32, bound u64`. Provenance lives in parallel via sections
//! (`kind u8, via u32` per label record) that are empty unless the path
//! flag is set. Arc records are `head u32, weight u64, mid u32` with
//! `0xFFFF_FFFF` for "no midpoint". In-direction sections are empty for
//! undirected indexes.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Seek, SeekFrom, Write};
use std::path::Path;

use crc::{Crc, Digest, CRC_64_ECMA_182};

use crate::dynamic::UpdateLog;
use crate::error::{Error, Result};
use crate::graph::IdMap;
use crate::hierarchy::{HalfEdge, LevelGraph, VertexHierarchy};
use crate::index::Index;
use crate::label::{LabelDirection, LabelEntry, LabelStore, Labels, Via};
use crate::{VertexId, NO_VERTEX};

pub const MAGIC: [u8; 4] = *b"ISLB";
pub const VERSION: u64 = 1;
pub const HEADER_LEN: u64 = 88;

const FLAG_DIRECTED: u64 = 1;
const FLAG_PATH: u64 = 1 << 1;
const FLAG_STALE: u64 = 1 << 2;

const LABEL_RECORD: u64 = 12;
const VIA_RECORD: u64 = 5;
const ARC_RECORD: u64 = 16;

static CRC64: Crc<u64> = Crc::<u64>::new(&CRC_64_ECMA_182);

/// Section order in the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(usize)]
pub enum Section {
    IdMap,
    Levels,
    OutLabelOffsets,
    OutLabelEntries,
    OutLabelVias,
    InLabelOffsets,
    InLabelEntries,
    InLabelVias,
    SnapOutOffsets,
    SnapOutArcs,
    SnapInOffsets,
    SnapInArcs,
    TopOffsets,
    TopArcs,
}

pub const SECTION_COUNT: usize = 14;

pub const SECTION_NAMES: [&str; SECTION_COUNT] = [
    "id_map",
    "levels",
    "out_label_offsets",
    "out_label_entries",
    "out_label_vias",
    "in_label_offsets",
    "in_label_entries",
    "in_label_vias",
    "snapshot_out_offsets",
    "snapshot_out_arcs",
    "snapshot_in_offsets",
    "snapshot_in_arcs",
    "top_offsets",
    "top_arcs",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Header {
    pub version: u64,
    pub directed: bool,
    pub path_data: bool,
    pub stale: bool,
    pub k: u32,
    pub slots: u64,
    pub top_vertices: u64,
    pub top_arcs: u64,
    pub log: UpdateLog,
    /// `(offset, length)` per section, in `Section` order.
    pub sections: Vec<(u64, u64)>,
}

impl Header {
    pub fn section(&self, s: Section) -> (u64, u64) {
        self.sections[s as usize]
    }
}

struct Checked<W: Write> {
    inner: W,
    digest: Digest<'static, u64>,
}

impl<W: Write> Write for Checked<W> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        let n = self.inner.write(buf)?;
        self.digest.update(&buf[..n]);
        Ok(n)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

fn encode_via(via: Via) -> (u8, u32) {
    match via {
        Via::Own => (0, NO_VERTEX),
        Via::Direct(None) => (1, NO_VERTEX),
        Via::Direct(Some(m)) => (2, m),
        Via::Through(u) => (3, u),
        Via::Unrecorded => (4, NO_VERTEX),
    }
}

fn decode_via(kind: u8, v: u32) -> Result<Via> {
    Ok(match kind {
        0 => Via::Own,
        1 => Via::Direct(None),
        2 => Via::Direct(Some(v)),
        3 => Via::Through(v),
        4 => Via::Unrecorded,
        _ => return Err(Error::corrupt(format!("unknown label provenance tag {kind}"))),
    })
}

fn put_u32(w: &mut impl Write, v: u32) -> io::Result<()> {
    w.write_all(&v.to_le_bytes())
}

fn put_u64(w: &mut impl Write, v: u64) -> io::Result<()> {
    w.write_all(&v.to_le_bytes())
}

fn put_offsets<'a, T: 'a>(w: &mut impl Write, lists: impl Iterator<Item = &'a [T]>) -> io::Result<()> {
    let mut acc = 0u64;
    put_u64(w, 0)?;
    for list in lists {
        acc += list.len() as u64;
        put_u64(w, acc)?;
    }
    Ok(())
}

fn put_arcs<'a>(w: &mut impl Write, lists: impl Iterator<Item = &'a [HalfEdge]>) -> io::Result<()> {
    for a in lists.flatten() {
        put_u32(w, a.vertex)?;
        put_u64(w, a.weight)?;
        put_u32(w, a.mid.unwrap_or(NO_VERTEX))?;
    }
    Ok(())
}

fn put_labels(w: &mut impl Write, store: &LabelStore, slots: usize) -> io::Result<()> {
    for v in 0..slots as VertexId {
        for e in store.get(v) {
            put_u32(w, e.ancestor)?;
            put_u64(w, e.bound)?;
        }
    }
    Ok(())
}

fn put_vias(w: &mut impl Write, store: &LabelStore, slots: usize) -> io::Result<()> {
    for v in 0..slots as VertexId {
        for e in store.get(v) {
            let (kind, via) = encode_via(e.via);
            w.write_all(&[kind])?;
            put_u32(w, via)?;
        }
    }
    Ok(())
}

/// Serializes `index` to `out`.
pub fn write_index<W: Write>(index: &Index, out: W) -> Result<()> {
    let h = &index.hierarchy;
    let n = h.universe();
    let directed = h.is_directed();
    let path = index.path_data;
    let out_labels = index.labels.store(LabelDirection::Out);
    let in_labels = index.labels.inn.as_ref();
    let snap_out = |v: usize| h.snap_out.get(v).map_or(&[][..], Vec::as_slice);
    let snap_in = |v: usize| h.snap_in.get(v).map_or(&[][..], Vec::as_slice);
    let top = &h.top;
    let offsets_len = (n as u64 + 1) * 8;
    let arcs_of = |f: &dyn Fn(usize) -> usize| (0..n).map(f).sum::<usize>() as u64;
    let out_total = out_labels.total_entries() as u64;
    let in_total = in_labels.map_or(0, |s| s.total_entries() as u64);
    let via_len = |total: u64| if path { total * VIA_RECORD } else { 0 };

    let lengths: [u64; SECTION_COUNT] = [
        n as u64 * 8,
        n as u64 * 4,
        offsets_len,
        out_total * LABEL_RECORD,
        via_len(out_total),
        if directed { offsets_len } else { 0 },
        in_total * LABEL_RECORD,
        via_len(in_total),
        offsets_len,
        arcs_of(&|v| snap_out(v).len()) * ARC_RECORD,
        if directed { offsets_len } else { 0 },
        if directed { arcs_of(&|v| snap_in(v).len()) * ARC_RECORD } else { 0 },
        offsets_len,
        arcs_of(&|v| top.out(v as VertexId).len()) * ARC_RECORD,
    ];

    let mut w = Checked {
        inner: BufWriter::new(out),
        digest: CRC64.digest(),
    };
    let mut flags = 0;
    if directed {
        flags |= FLAG_DIRECTED;
    }
    if path {
        flags |= FLAG_PATH;
    }
    if index.stale {
        flags |= FLAG_STALE;
    }
    w.write_all(&MAGIC)?;
    put_u32(&mut w, 0)?;
    for field in [
        VERSION,
        flags,
        h.k() as u64,
        n as u64,
        top.vertex_count() as u64,
        top.arc_count() as u64,
        index.log.inserted,
        index.log.deleted,
        index.log.touched_labels,
        SECTION_COUNT as u64,
    ] {
        put_u64(&mut w, field)?;
    }
    let mut offset = HEADER_LEN + SECTION_COUNT as u64 * 16;
    for len in lengths {
        put_u64(&mut w, offset)?;
        put_u64(&mut w, len)?;
        offset += len;
    }

    for &e in index.ids.external_ids() {
        put_u64(&mut w, e)?;
    }
    for &l in h.levels() {
        put_u32(&mut w, l)?;
    }
    let stores = std::iter::once(Some(out_labels)).chain(std::iter::once(in_labels));
    for store in stores.flatten() {
        put_offsets(&mut w, (0..n as VertexId).map(|v| store.get(v)))?;
        put_labels(&mut w, store, n)?;
        if path {
            put_vias(&mut w, store, n)?;
        }
    }
    put_offsets(&mut w, (0..n).map(snap_out))?;
    put_arcs(&mut w, (0..n).map(snap_out))?;
    if directed {
        put_offsets(&mut w, (0..n).map(snap_in))?;
        put_arcs(&mut w, (0..n).map(snap_in))?;
    }
    put_offsets(&mut w, (0..n as VertexId).map(|v| top.out(v)))?;
    put_arcs(&mut w, (0..n as VertexId).map(|v| top.out(v)))?;

    let Checked { mut inner, digest } = w;
    inner.write_all(&digest.finalize().to_le_bytes())?;
    inner.flush()?;
    Ok(())
}

/// Serializes `index` into a byte vector.
pub fn to_bytes(index: &Index) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    write_index(index, &mut buf)?;
    Ok(buf)
}

/// Writes `index` to `path`, replacing any existing file atomically.
pub fn save_index(index: &Index, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    write_index(index, tmp.as_file())?;
    tmp.as_file().sync_all().map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

struct Cursor<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(buf: &'a [u8]) -> Self {
        Cursor { buf, pos: 0 }
    }

    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self.pos.checked_add(n).filter(|&e| e <= self.buf.len());
        let end = end.ok_or_else(|| Error::corrupt("unexpected end of data"))?;
        let out = &self.buf[self.pos..end];
        self.pos = end;
        Ok(out)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
}

fn read_exact_at<R: Read + Seek>(r: &mut R, offset: u64, len: u64) -> Result<Vec<u8>> {
    let len = usize::try_from(len).map_err(|_| Error::corrupt("section too large"))?;
    r.seek(SeekFrom::Start(offset))?;
    let mut buf = vec![0u8; len];
    r.read_exact(&mut buf).map_err(|e| match e.kind() {
        io::ErrorKind::UnexpectedEof => Error::corrupt("section extends past end of file"),
        _ => Error::Stream(e),
    })?;
    Ok(buf)
}

fn parse_header(bytes: &[u8], file_len: u64) -> Result<Header> {
    let mut c = Cursor::new(bytes);
    if c.take(4)? != MAGIC {
        return Err(Error::corrupt("bad magic"));
    }
    if c.u32()? != 0 {
        return Err(Error::corrupt("nonzero reserved header bytes"));
    }
    let version = c.u64()?;
    if version != VERSION {
        return Err(Error::corrupt(format!("unsupported version {version}")));
    }
    let flags = c.u64()?;
    if flags & !(FLAG_DIRECTED | FLAG_PATH | FLAG_STALE) != 0 {
        return Err(Error::corrupt(format!("unknown flags {flags:#x}")));
    }
    let k = u32::try_from(c.u64()?).map_err(|_| Error::corrupt("k out of range"))?;
    let slots = c.u64()?;
    let top_vertices = c.u64()?;
    let top_arcs = c.u64()?;
    let log = UpdateLog {
        inserted: c.u64()?,
        deleted: c.u64()?,
        touched_labels: c.u64()?,
    };
    let count = c.u64()?;
    if count != SECTION_COUNT as u64 {
        return Err(Error::corrupt(format!("expected {SECTION_COUNT} sections, found {count}")));
    }
    let data_end = file_len - 8;
    let mut sections = Vec::with_capacity(SECTION_COUNT);
    for name in SECTION_NAMES {
        let (offset, len) = (c.u64()?, c.u64()?);
        if offset.checked_add(len).map_or(true, |end| end > data_end) || offset < HEADER_LEN {
            return Err(Error::corrupt(format!("section {name} out of bounds")));
        }
        sections.push((offset, len));
    }
    if slots > NO_VERTEX as u64 || k == 0 {
        return Err(Error::corrupt("header fields out of range"));
    }
    Ok(Header {
        version,
        directed: flags & FLAG_DIRECTED != 0,
        path_data: flags & FLAG_PATH != 0,
        stale: flags & FLAG_STALE != 0,
        k,
        slots,
        top_vertices,
        top_arcs,
        log,
        sections,
    })
}

/// Random-access reader that keeps only the header and offset tables in
/// memory; each label is fetched with a single seek and read.
pub struct IndexReader<R> {
    inner: R,
    header: Header,
    ids: Vec<u64>,
    levels: Vec<u32>,
    out_offsets: Vec<u64>,
    in_offsets: Vec<u64>,
}

impl IndexReader<BufReader<File>> {
    pub fn open_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        IndexReader::open(BufReader::new(file))
    }
}

impl<R: Read + Seek> IndexReader<R> {
    /// Verifies the checksum and loads the header and offset tables.
    pub fn open(mut inner: R) -> Result<Self> {
        let file_len = inner.seek(SeekFrom::End(0))?;
        if file_len < HEADER_LEN + 8 {
            return Err(Error::corrupt("file too short"));
        }
        inner.seek(SeekFrom::Start(0))?;
        let mut digest = CRC64.digest();
        let mut remaining = file_len - 8;
        let mut buf = vec![0u8; 1 << 16];
        let mut head = Vec::with_capacity(HEADER_LEN as usize + SECTION_COUNT * 16);
        while remaining > 0 {
            let want = remaining.min(buf.len() as u64) as usize;
            inner.read_exact(&mut buf[..want])?;
            digest.update(&buf[..want]);
            if head.len() < head.capacity() {
                let room = head.capacity() - head.len();
                head.extend_from_slice(&buf[..want.min(room)]);
            }
            remaining -= want as u64;
        }
        let mut trailer = [0u8; 8];
        inner.read_exact(&mut trailer)?;
        let stored = u64::from_le_bytes(trailer);
        let computed = digest.finalize();
        if stored != computed {
            return Err(Error::ChecksumMismatch { stored, computed });
        }
        let header = parse_header(&head, file_len)?;
        let n = header.slots as usize;

        let (off, len) = header.section(Section::IdMap);
        expect_len("id_map", len, n as u64 * 8)?;
        let bytes = read_exact_at(&mut inner, off, len)?;
        let ids = bytes.chunks_exact(8).map(|b| u64::from_le_bytes(b.try_into().unwrap())).collect();

        let (off, len) = header.section(Section::Levels);
        expect_len("levels", len, n as u64 * 4)?;
        let bytes = read_exact_at(&mut inner, off, len)?;
        let levels: Vec<u32> = bytes.chunks_exact(4).map(|b| u32::from_le_bytes(b.try_into().unwrap())).collect();
        if levels.iter().any(|&l| l > header.k) {
            return Err(Error::corrupt("level exceeds k"));
        }

        let out_offsets = read_label_offsets(&mut inner, &header, LabelDirection::Out)?;
        let in_offsets = read_label_offsets(&mut inner, &header, LabelDirection::In)?;
        Ok(IndexReader { inner, header, ids, levels, out_offsets, in_offsets })
    }

    pub fn header(&self) -> &Header {
        &self.header
    }

    pub fn slots(&self) -> usize {
        self.header.slots as usize
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn external_ids(&self) -> &[u64] {
        &self.ids
    }

    fn label_sections(&self, dir: LabelDirection) -> (&[u64], Section, Section) {
        match dir {
            LabelDirection::In if self.header.directed => {
                (&self.in_offsets, Section::InLabelEntries, Section::InLabelVias)
            }
            _ => (&self.out_offsets, Section::OutLabelEntries, Section::OutLabelVias),
        }
    }

    /// Ancestors and bounds of `v`'s label, fetched with one seek and one
    /// contiguous read. Provenance is left as `Via::Unrecorded`.
    pub fn load_label(&mut self, v: VertexId, dir: LabelDirection) -> Result<Vec<LabelEntry>> {
        if v as usize >= self.slots() {
            return Err(Error::InvalidVertex(v));
        }
        let (offsets, entries, _) = self.label_sections(dir);
        let (start, end) = (offsets[v as usize], offsets[v as usize + 1]);
        let base = self.header.section(entries).0;
        let bytes = read_exact_at(&mut self.inner, base + start * LABEL_RECORD, (end - start) * LABEL_RECORD)?;
        decode_labels(&bytes, self.header.slots)
    }

    /// Like `load_label`, plus a second read for the provenance records.
    pub fn load_label_with_vias(&mut self, v: VertexId, dir: LabelDirection) -> Result<Vec<LabelEntry>> {
        let mut label = self.load_label(v, dir)?;
        if !self.header.path_data {
            return Ok(label);
        }
        let (offsets, _, vias) = self.label_sections(dir);
        let start = offsets[v as usize];
        let base = self.header.section(vias).0;
        let bytes = read_exact_at(&mut self.inner, base + start * VIA_RECORD, label.len() as u64 * VIA_RECORD)?;
        apply_vias(&mut label, &bytes)?;
        Ok(label)
    }

    fn load_label_store(&mut self, dir: LabelDirection) -> Result<LabelStore> {
        let (offsets, entries, vias) = self.label_sections(dir);
        let offsets = offsets.to_vec();
        let (off, len) = self.header.section(entries);
        let bytes = read_exact_at(&mut self.inner, off, len)?;
        let (off, len) = self.header.section(vias);
        let via_bytes = read_exact_at(&mut self.inner, off, len)?;
        let rec = LABEL_RECORD as usize;
        let vrec = VIA_RECORD as usize;
        let mut labels = Vec::with_capacity(self.slots());
        for w in offsets.windows(2) {
            let (a, b) = (w[0] as usize, w[1] as usize);
            let mut label = decode_labels(&bytes[a * rec..b * rec], self.header.slots)?;
            if self.header.path_data {
                apply_vias(&mut label, &via_bytes[a * vrec..b * vrec])?;
            }
            labels.push(label);
        }
        Ok(LabelStore::from_labels(labels))
    }

    fn load_adjacency(&mut self, offsets: Section, arcs: Section) -> Result<Vec<Vec<HalfEdge>>> {
        let table = read_offsets(&mut self.inner, &self.header, offsets, &[(arcs, ARC_RECORD)], true)?;
        let (off, len) = self.header.section(arcs);
        let bytes = read_exact_at(&mut self.inner, off, len)?;
        let n = self.header.slots;
        let mut out = Vec::with_capacity(self.slots());
        for w in table.windows(2) {
            let mut c = Cursor::new(&bytes[(w[0] * ARC_RECORD) as usize..(w[1] * ARC_RECORD) as usize]);
            let mut list = Vec::with_capacity((w[1] - w[0]) as usize);
            for _ in w[0]..w[1] {
                let vertex = c.u32()?;
                let weight = c.u64()?;
                let mid = c.u32()?;
                if vertex as u64 >= n || (mid != NO_VERTEX && mid as u64 >= n) {
                    return Err(Error::corrupt("arc endpoint out of range"));
                }
                list.push(HalfEdge {
                    vertex,
                    weight,
                    mid: (mid != NO_VERTEX).then_some(mid),
                });
            }
            out.push(list);
        }
        Ok(out)
    }

    /// Loads the whole index into memory.
    pub fn load(mut self) -> Result<Index> {
        let n = self.slots();
        let directed = self.header.directed;
        let out = self.load_label_store(LabelDirection::Out)?;
        let inn = if directed { Some(self.load_label_store(LabelDirection::In)?) } else { None };
        let snap_out = self.load_adjacency(Section::SnapOutOffsets, Section::SnapOutArcs)?;
        let snap_in = if directed {
            self.load_adjacency(Section::SnapInOffsets, Section::SnapInArcs)?
        } else {
            Vec::new()
        };
        let top_out = self.load_adjacency(Section::TopOffsets, Section::TopArcs)?;

        let k = self.header.k;
        let top_members = (0..n as VertexId).filter(|&v| self.levels[v as usize] == k);
        let top_arcs = top_out
            .iter()
            .enumerate()
            .flat_map(|(v, list)| list.iter().map(move |a| (v as VertexId, *a)));
        let top = LevelGraph::from_arcs(n, directed, top_members, top_arcs);
        if top.vertex_count() as u64 != self.header.top_vertices || top.arc_count() as u64 != self.header.top_arcs {
            return Err(Error::corrupt("top graph does not match header counts"));
        }
        let mut levels = vec![Vec::new(); k as usize - 1];
        for (v, &l) in self.levels.iter().enumerate() {
            if l != 0 && l < k {
                levels[l as usize - 1].push(v as VertexId);
            }
        }
        let hierarchy = VertexHierarchy {
            directed,
            k,
            level_of: self.levels,
            levels,
            snap_out,
            snap_in,
            top,
            level_graphs: None,
        };
        let mut ids = IdMap::from_external(self.ids);
        ids.retain_live(|v| hierarchy.is_live(v));
        Ok(Index {
            ids,
            hierarchy,
            labels: Labels { out, inn },
            path_data: self.header.path_data,
            stale: self.header.stale,
            log: self.header.log,
        })
    }
}

fn expect_len(name: &str, got: u64, want: u64) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::corrupt(format!("section {name} has {got} bytes, expected {want}")))
    }
}

fn read_offsets<R: Read + Seek>(
    r: &mut R,
    header: &Header,
    offsets: Section,
    records: &[(Section, u64)],
    present: bool,
) -> Result<Vec<u64>> {
    let (off, len) = header.section(offsets);
    let name = SECTION_NAMES[offsets as usize];
    if !present {
        expect_len(name, len, 0)?;
        for &(section, _) in records {
            expect_len(SECTION_NAMES[section as usize], header.section(section).1, 0)?;
        }
        return Ok(Vec::new());
    }
    expect_len(name, len, (header.slots + 1) * 8)?;
    let bytes = read_exact_at(r, off, len)?;
    let table: Vec<u64> = bytes.chunks_exact(8).map(|b| u64::from_le_bytes(b.try_into().unwrap())).collect();
    if table[0] != 0 || table.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::corrupt(format!("section {name} is not monotone")));
    }
    let total = *table.last().unwrap();
    for &(section, record_len) in records {
        if total.checked_mul(record_len) != Some(header.section(section).1) {
            return Err(Error::corrupt(format!("section {name} disagrees with its records")));
        }
    }
    Ok(table)
}

fn read_label_offsets<R: Read + Seek>(r: &mut R, header: &Header, dir: LabelDirection) -> Result<Vec<u64>> {
    let (offsets, entries, vias, present) = match dir {
        LabelDirection::Out => (Section::OutLabelOffsets, Section::OutLabelEntries, Section::OutLabelVias, true),
        LabelDirection::In => (Section::InLabelOffsets, Section::InLabelEntries, Section::InLabelVias, header.directed),
    };
    let via_len = if header.path_data { VIA_RECORD } else { 0 };
    read_offsets(r, header, offsets, &[(entries, LABEL_RECORD), (vias, via_len)], present)
}

fn decode_labels(bytes: &[u8], slots: u64) -> Result<Vec<LabelEntry>> {
    let mut c = Cursor::new(bytes);
    let mut out = Vec::with_capacity(bytes.len() / LABEL_RECORD as usize);
    for _ in 0..bytes.len() / LABEL_RECORD as usize {
        let ancestor = c.u32()?;
        let bound = c.u64()?;
        if ancestor as u64 >= slots {
            return Err(Error::corrupt("label ancestor out of range"));
        }
        if out.last().is_some_and(|p: &LabelEntry| p.ancestor >= ancestor) {
            return Err(Error::corrupt("label entries out of order"));
        }
        out.push(LabelEntry { ancestor, bound, via: Via::Unrecorded });
    }
    Ok(out)
}

fn apply_vias(label: &mut [LabelEntry], bytes: &[u8]) -> Result<()> {
    let mut c = Cursor::new(bytes);
    for e in label {
        let kind = c.u8()?;
        e.via = decode_via(kind, c.u32()?)?;
    }
    Ok(())
}

/// Reads a whole index from `path`.
pub fn load_index(path: impl AsRef<Path>) -> Result<Index> {
    IndexReader::open_path(path)?.load()
}

/// Reads a whole index from bytes.
pub fn from_bytes(bytes: &[u8]) -> Result<Index> {
    IndexReader::open(io::Cursor::new(bytes))?.load()
}
