#!/usr/bin/env python3
# Copyright 2026 The ethio-eval Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Writes the 50-utterance end-to-end fixture and its expected scores.

The scorer below is self-contained (plain Levenshtein, unicodedata) and is
kept deliberately separate from the C++ library.
"""

import csv
import json
import os
import random
import unicodedata

LANGS = ["AMH", "TIR", "ORM", "SID", "WAL"]
GEEZ = {"AMH", "TIR"}

SENTENCES = {
    "AMH": [
        "ሰላም ነው።", "አዲስ አበባ ትልቅ ከተማ ናት።", "ዛሬ ሐሙስ ነው፡ ነገ ዓርብ",
        "ልጆቹ ወደ ትምህርት ቤት ሄዱ", "ቡና ጠጣን፣ ዳቦም በላን።", "ውሃ ንጹህ ነው",
        "መጽሐፉን አነበብኩ", "ሀገራችን ውብ ናት", "ገበያ ሄደች", "ጸሐይ ወጣች።",
    ],
    "TIR": [
        "ሰላም እዩ", "ከመይ ኣለኻ?", "ኣስመራ ጽብቕቲ ከተማ እያ።", "ሎሚ ሓሙስ እዩ",
        "ቆልዑ ናብ ቤት ትምህርቲ ከዱ", "ማይ ጽሩይ እዩ", "መጽሓፍ ኣንቢበ",
        "ዓዲ ጽብቕቲ እያ", "ዕዳጋ ከደት", "ጸሓይ ወጺኣ።",
    ],
    "ORM": [
        "Nagaa jirta?", "Baay'ee galatoomi.", "Hoolaan marga nyaatte",
        "Bishaan qulqulluu dha", "Ijoolleen mana barumsaa deeman",
        "Har'a kamisa dha", "Kitaaba dubbise", "Biyyi keenya bareedduu dha",
        "Gabaa deemte", "Aduun baate.",
    ],
    "SID": [
        "Ciao yitino?", "Galanni kaa'a.", "Lowo mine noo",
        "Wo'ma saada", "Qoqqowi dikkote", "Hakkuri lowo",
        "Maxaafa nabbabbino", "Gobbaa bareedde", "Gabaya hadhino",
        "Arri fulino.",
    ],
    "WAL": [
        "Saro ne?", "Galatiya.", "Ha sohuwaa kamisa",
        "Haattay geeshsha", "Naati timirtte keettaa biidosona",
        "Maxaafaa nabbabaas", "Biittay loytta", "Giyaa baasu",
        "Awai kessiis", "Kataa mis.",
    ],
}

# Target split per sentence index; everything else is test.
NON_TEST = {8: "train", 9: "validation"}

# Gender per (language, index). WAL test has no male speaker so the gap
# is undefined there and the WAL/test/M duration cell is 0.00.
GENDERS = {
    "AMH": ["M", "F", "M", "F", "M", "F", "M", "unknown", "F", "M"],
    "TIR": ["F", "M", "F", "M", "F", "M", "F", "M", "M", "F"],
    "ORM": ["M", "M", "F", "F", "M", "F", "unknown", "F", "M", "F"],
    "SID": ["F", "M", "M", "F", "F", "M", "F", "M", "F", "M"],
    "WAL": ["F", "F", "unknown", "F", "F", "F", "F", "unknown", "M", "F"],
}

HOMOPHONE_SOURCES = [(0x1210, 0x1200), (0x1280, 0x1200), (0x1220, 0x1230),
                     (0x12D0, 0x12A0), (0x1340, 0x1338)]
APOSTROPHES = {"’": "'", "‘": "'", "ʼ": "'", "ʻ": "'"}


def fold(text):
    out = []
    for ch in text:
        cp = ord(ch)
        for src, dst in HOMOPHONE_SOURCES:
            if src <= cp < src + 7:
                cp = dst + (cp - src)
        out.append(chr(cp))
    return "".join(out)


def normalize(text, lang):
    text = unicodedata.normalize("NFC", text)
    text = "".join(c.lower() if "a" <= c.lower() <= "z" else c for c in text)
    kept = []
    for ch in text:
        ch = APOSTROPHES.get(ch, ch)
        if ch == "፡":
            kept.append(" ")
        elif unicodedata.category(ch).startswith("P") and ch not in "'-":
            continue
        else:
            kept.append(ch)
    text = " ".join("".join(kept).split())
    if lang in GEEZ:
        text = fold(text)
    return text


def levenshtein(a, b):
    prev = list(range(len(b) + 1))
    for i in range(1, len(a) + 1):
        cur = [i] + [0] * len(b)
        for j in range(1, len(b) + 1):
            cur[j] = min(prev[j - 1] + (a[i - 1] != b[j - 1]),
                         prev[j] + 1, cur[j - 1] + 1)
        prev = cur
    return prev[-1]


def corrupt(text, lang, rng, strength):
    words = text.split()
    for _ in range(strength):
        op = rng.randrange(4)
        if op == 0 and len(words) > 1:
            del words[rng.randrange(len(words))]
        elif op == 1:
            words.insert(rng.randrange(len(words) + 1),
                         rng.choice(SENTENCES[lang][0].split()))
        elif op == 2:
            k = rng.randrange(len(words))
            w = words[k]
            pos = rng.randrange(len(w))
            words[k] = w[:pos] + w[pos + 1:] if len(w) > 1 else w + w
        else:
            k = rng.randrange(len(words))
            words[k] = words[k] + rng.choice(words)[:1]
    return " ".join(words)


def rate(errors, ref):
    return None if ref == 0 else 100.0 * errors / ref


def summarize(rows):
    we = sum(r["word_errors"] for r in rows)
    rw = sum(r["ref_words"] for r in rows)
    ce = sum(r["char_errors"] for r in rows)
    rc = sum(r["ref_chars"] for r in rows)
    out = {
        "n_utts": len(rows),
        "ref_words": rw,
        "ref_chars": rc,
        "word_errors": we,
        "char_errors": ce,
        "wer": rate(we, rw),
        "cer": rate(ce, rc),
    }
    out["checkpoint_score"] = 0.5 * out["wer"] + 0.5 * out["cer"]
    if any(r["pred"] is not None for r in rows):
        out["lid_acc"] = 100.0 * sum(r["pred"] == r["lang"] for r in rows) / len(rows)
    else:
        out["lid_acc"] = None
    for g, key in (("M", "male_wer"), ("F", "female_wer")):
        sub = [r for r in rows if r["gender"] == g]
        out[key] = rate(sum(r["word_errors"] for r in sub),
                        sum(r["ref_words"] for r in sub))
    out["delta"] = (None if out["male_wer"] is None or out["female_wer"] is None
                    else out["male_wer"] - out["female_wer"])
    for g, key in (("M", "n_male"), ("F", "n_female"), ("unknown", "n_unknown")):
        out[key] = sum(r["gender"] == g for r in rows)
    return out


def score(manifest, hyps):
    by_id = {h["id"]: h for h in hyps}
    rows = []
    for utt in manifest:
        if utt["split"] != "test":
            continue
        hyp = by_id[utt["id"]]
        ref_n = normalize(utt["text"], utt["language"])
        hyp_n = normalize(hyp["text"], utt["language"])
        rows.append({
            "lang": utt["language"],
            "gender": utt["gender"],
            "pred": hyp.get("predicted_lang"),
            "word_errors": levenshtein(ref_n.split(), hyp_n.split()),
            "ref_words": len(ref_n.split()),
            "char_errors": levenshtein(list(ref_n), list(hyp_n)),
            "ref_chars": len(ref_n),
        })
    langs = {}
    for lang in LANGS:
        sub = [r for r in rows if r["lang"] == lang]
        if sub:
            langs[lang] = summarize(sub)
    micro = summarize(rows)
    macro = {}
    for key in ("wer", "cer", "lid_acc"):
        vals = [v[key] for v in langs.values()]
        macro[key] = None if None in vals else sum(vals) / len(vals)
    macro["checkpoint_score"] = 0.5 * macro["wer"] + 0.5 * macro["cer"]
    return {"languages": langs, "micro": micro, "macro": macro}


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    rng = random.Random(20260101)
    manifest, hyps_a, hyps_b = [], [], []
    for li, lang in enumerate(LANGS):
        for i, text in enumerate(SENTENCES[lang]):
            uid = "%s_%03d" % (lang.lower(), i)
            duration = 600.0 + 180.0 * i + 37.5 * li
            manifest.append({
                "id": uid,
                "language": lang,
                "split": NON_TEST.get(i, "test"),
                "gender": GENDERS[lang][i],
                "duration_s": duration,
                "text": text,
                "audio_path": "audio/%s.wav" % uid,
            })
            hyp_a = corrupt(text, lang, rng, i % 3)
            # A homophone spelling variant that only folding repairs.
            if lang == "AMH" and i == 6:
                hyp_a = hyp_a.replace("ሐ", "ሀ")
            if lang == "ORM" and i == 1:
                hyp_a = hyp_a.replace("'", "’")
            pred = lang
            if (li * 10 + i) % 7 == 3:
                pred = LANGS[(li + 1) % 5]
            if (li * 10 + i) % 11 == 5:
                pred = None
            hyps_a.append({"id": uid, "text": hyp_a, "predicted_lang": pred})
            hyps_b.append({"id": uid,
                           "text": corrupt(text, lang, rng, 1 + i % 3),
                           "predicted_lang": None})

    def dump(name, records):
        with open(os.path.join(here, name), "w", encoding="utf-8") as f:
            for r in records:
                f.write(json.dumps(r, ensure_ascii=False) + "\n")

    dump("manifest.jsonl", manifest)
    dump("hyps_a.jsonl", hyps_a)
    dump("hyps_b.jsonl", hyps_b)
    with open(os.path.join(here, "manifest.csv"), "w", encoding="utf-8",
              newline="") as f:
        fields = ["id", "language", "split", "gender", "duration_s", "text",
                  "audio_path"]
        writer = csv.DictWriter(f, fieldnames=fields)
        writer.writeheader()
        for row in manifest:
            writer.writerow(row)

    durations = {}
    for lang in LANGS:
        for split in ("train", "validation", "test"):
            cell = {}
            for g in ("M", "F", "unknown"):
                cell[g] = round(sum(u["duration_s"] for u in manifest
                                    if u["language"] == lang and u["split"] == split
                                    and u["gender"] == g) / 3600.0, 2)
            cell["All"] = round(sum(u["duration_s"] for u in manifest
                                    if u["language"] == lang and u["split"] == split)
                                / 3600.0, 2)
            durations["%s/%s" % (lang, split)] = cell

    expected = {
        "split": "test",
        "norm": "eval",
        "system_a": score(manifest, hyps_a),
        "system_b": score(manifest, hyps_b),
        "durations_hours": durations,
    }
    with open(os.path.join(here, "expected.json"), "w", encoding="utf-8") as f:
        json.dump(expected, f, ensure_ascii=False, indent=2)
        f.write("\n")


if __name__ == "__main__":
    main()
