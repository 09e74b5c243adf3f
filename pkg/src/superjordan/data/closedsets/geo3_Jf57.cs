[closedset]
label = geo3_Jf57
source = Jf57
targets = Jf58
basis = e1 e2 e3 f
condition: c[3,4,4] = 0
condition: c[2,4,4] = 0
condition: c[1,1,1] = c[1,4,4]
