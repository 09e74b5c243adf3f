[closedset]
label = geo2_Jc64
source = Jc64
targets = Jc50 Jc58 Jc62 Jc65
basis = e1 e2 f1 f2
condition: c[1,2,1] = 0
condition: 2*c[1,1,1]-c[1,2,2]-c[1,3,3]-c[1,4,4] = 0
condition: c[1,3,3]+c[3,1,3] = c[1,1,1]
condition: c[3,4,2]*c[2,4,3]+c[2,4,2]*c[2,4,2] = 0
