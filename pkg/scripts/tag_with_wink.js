#!/usr/bin/env node
// Silver-tag sentences from the npm `nlp-corpus` docs with wink-pos-tagger,
// emitting CoNLL token<TAB>tag lines with blank lines between sentences.
//
// Usage: node tag_with_wink.js <nlp-corpus-builds-dir> <n-sentences> > out.conll
//
// Requires: npm install wink-pos-tagger nlp-corpus

const fs = require('fs');
const path = require('path');

const PENN = new Set([
  'CC','CD','DT','EX','FW','IN','JJ','JJR','JJS','LS','MD','NN','NNS','NNP',
  'NNPS','PDT','POS','PRP','PRP$','RB','RBR','RBS','RP','SYM','TO','UH','VB',
  'VBD','VBG','VBN','VBP','VBZ','WDT','WP','WP$','WRB',
  '.',',',':','``',"''",'-LRB-','-RRB-','$','#',
]);

const buildsDir = process.argv[2];
const target = parseInt(process.argv[3], 10);
const tagger = require('wink-pos-tagger')();

let emitted = 0;
const files = fs.readdirSync(buildsDir).filter(f => f.endsWith('.json')).sort();
outer:
for (const f of files.slice(40)) {  // skip early docs; variety over UN-corpus runs
  const doc = JSON.parse(fs.readFileSync(path.join(buildsDir, f)));
  for (const key of Object.keys(doc)) {
    const sent = doc[key];
    if (typeof sent !== 'string') continue;
    if (sent.length < 20 || sent.length > 220) continue;
    if (!/^[\x20-\x7E]+$/.test(sent)) continue;  // printable ASCII only
    const tagged = tagger.tagSentence(sent);
    if (tagged.length < 5 || tagged.length > 45) continue;
    if (!tagged.every(t => PENN.has(t.pos) && !/\s/.test(t.value))) continue;
    for (const t of tagged) {
      process.stdout.write(t.value + '\t' + t.pos + '\n');
    }
    process.stdout.write('\n');
    emitted += 1;
    if (emitted >= target) break outer;
  }
}
process.stderr.write(`emitted ${emitted} sentences\n`);
