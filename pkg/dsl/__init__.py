# Group expression language
